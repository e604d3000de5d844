#include "promo/report.hpp"

namespace promo {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json rational_json(const Rational& x) {
  if (x.get_den() == 1) return integer_json(x.get_num());
  return Json(to_string(x));
}

Json set_json(ElementSet s) {
  Json out = Json::array();
  for (int e : elements_of(s)) out.push_back(e);
  return out;
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return Json{{"n", p.size()}, {"covers", covers}};
}

Json to_json(const LinearForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(rational_json(c));
  return out;
}

Json to_json(const WeightVector& w) {
  Json out = Json::array();
  for (const auto& x : w.values()) out.push_back(rational_json(x));
  return out;
}

Json to_json(const TransitionMatrix& m) {
  Json basis = Json::array();
  for (const auto& w : m.basis().words()) basis.push_back(format_word(w));
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m.entry(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"mode", to_string(m.mode())}, {"basis", basis}, {"entries", entries}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SpectrumPrediction& s) {
  Json out = Json::array();
  for (const auto& item : s.items) {
    out.push_back(Json{{"upper_set", set_json(item.upper_set)},
                       {"form", item.eigenvalue.to_string()},
                       {"coeffs", to_json(item.eigenvalue)},
                       {"multiplicity", integer_json(item.multiplicity)},
                       {"zero_multiplicity", sgn(item.multiplicity) == 0}});
  }
  return out;
}

Json to_json(const ProbeResult& r) {
  Json eigenvalues = Json::array();
  for (const auto& ev : r.eigenvalues) {
    eigenvalues.push_back(Json{{"form", ev.form.to_string()},
                               {"coeffs", to_json(ev.form)},
                               {"multiplicity", ev.multiplicity}});
  }
  Json samples = Json::array();
  for (const auto& w : r.samples) samples.push_back(to_json(w));
  return Json{{"linear", r.linear},
              {"eigenvalues", eigenvalues},
              {"residual_degree", r.residual_degree},
              {"samples", samples}};
}

Json to_json(const ConjectureReport& r) {
  return Json{{"hypothesis", r.hypothesis},
              {"linear", r.linear},
              {"coeffs_pm1", r.coeffs_pm1},
              {"max_two_successors", r.max_two_successors},
              {"neg_coeff_condition", r.neg_coeff_condition},
              {"consistent", r.consistent}};
}

Json to_json(const EggBox& box) {
  Json grids = Json::array();
  for (const auto& grid : box.grids) {
    Json cells = Json::array();
    for (const auto& row : grid.cells) {
      Json line = Json::array();
      for (const auto& cell : row) {
        line.push_back(Json{{"size", cell.elements.size()}, {"idempotent", cell.idempotent}});
      }
      cells.push_back(std::move(line));
    }
    grids.push_back(Json{{"rows", grid.rows()},
                         {"cols", grid.cols()},
                         {"stars", grid.stars()},
                         {"cells", cells}});
  }
  return grids;
}

Json to_json(const std::vector<MixingRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"k", row.k},
                       {"tv_exact", rational_json(row.tv)},
                       {"bound", row.bound ? Json(*row.bound) : Json(nullptr)}});
  }
  return out;
}

}  // namespace promo
