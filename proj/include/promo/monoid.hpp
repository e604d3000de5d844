#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "promo/poset.hpp"
#include "promo/word.hpp"

namespace promo {

/// A map from the basis to itself, stored as the image index of every basis
/// element. As a 0/1 matrix, column j has its single 1 in row images[j].
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  static Transformation identity(std::size_t size);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_constant() const;

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Transformation& a, const Transformation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

/// Matrix: x * y is the matrix product, i.e. y is applied first.
/// Action: x * y applies x first, as for operators acting on the right.
/// The two orders give the same set of maps with R and L exchanged.
enum class ProductOrder { Matrix, Action };

Transformation multiply(const Transformation& x, const Transformation& y, ProductOrder order);

/// G_1..G_n over the lexicographic basis of L(P): G_i maps pi to pi * d^_i.
std::vector<Transformation> generators(const Poset& p, const Limits& limits = {});

class Monoid {
 public:
  /// Breadth-first closure from the identity; element k is reached by the
  /// shortlex-least generator word. Throws CapExceeded beyond `cap` elements.
  static Monoid generate(std::vector<Transformation> gens, ProductOrder order,
                         std::size_t cap = 100000);
  /// Wraps an explicit element list; throws NotClosed unless it contains
  /// the identity and is closed under multiplication by the generators on
  /// both sides.
  static Monoid from_elements(std::vector<Transformation> gens,
                              std::vector<Transformation> elements, ProductOrder order);

  ProductOrder order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Transformation>& generators() const { return gens_; }
  /// Index of generator i (0-based) among the elements.
  std::size_t generator_index(std::size_t i) const { return gen_index_[i]; }

  std::size_t index_of(const Transformation& t) const;
  std::size_t product(std::size_t a, std::size_t b) const;

  /// right[a][g] = index of elements[a] * gens[g]; left[a][g] = gens[g] * elements[a].
  const std::vector<std::vector<std::size_t>>& right_table() const { return right_; }
  const std::vector<std::vector<std::size_t>>& left_table() const { return left_; }

 private:
  void build_tables();

  ProductOrder order_ = ProductOrder::Matrix;
  std::vector<Transformation> gens_;
  std::vector<std::size_t> gen_index_;
  std::vector<Transformation> elements_;
  std::unordered_map<Transformation, std::size_t, TransformationHash> index_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
};

/// Class ids per element for Green's relations R, L, H and D. Ids are
/// numbered in order of the smallest element of each class.
struct GreenClasses {
  std::vector<std::size_t> r, l, h, d;
  std::size_t r_count = 0, l_count = 0, h_count = 0, d_count = 0;
};

GreenClasses green_classes(const Monoid& m);

bool is_r_trivial(const Monoid& m);
bool is_l_trivial(const Monoid& m);
bool is_aperiodic(const Monoid& m);
bool is_idempotent(const Monoid& m, std::size_t x);

struct RFactorStats {
  /// Longest common suffix of the images of all basis words.
  Word rfactor;
  ElementSet rfactor_set = 0;
  /// {i : x * G_i = x}
  ElementSet des = 0;
  /// (n - |Rfactor|, |des|)
  std::pair<int, int> u;
};

RFactorStats rfactor_stats(const Monoid& m, const Basis& basis, int n, std::size_t x);

struct EggBoxCell {
  std::vector<std::size_t> elements;
  bool idempotent = false;
};

struct EggBoxGrid {
  /// cells[row][col]; rows are R-classes and columns L-classes of one D-class.
  std::vector<std::vector<EggBoxCell>> cells;
  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells[0].size(); }
  std::size_t stars() const;
};

struct EggBox {
  /// Ordered by D-class size, then by smallest element.
  std::vector<EggBoxGrid> grids;
};

EggBox eggbox(const Monoid& m);
std::string to_ascii(const EggBox& box);
std::string to_dot(const EggBox& box);

}  // namespace promo
