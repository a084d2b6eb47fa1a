#pragma once

#include "kas3/bipartite.hpp"
#include "kas3/config.hpp"
#include "kas3/cover_search.hpp"
#include "kas3/error.hpp"
#include "kas3/parallel.hpp"
#include "kas3/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kas3 {

/// Sparse n1 x n2 x n3 array over an exact ring; absent entries are zero and
/// zeros are never stored.
template <class T>
class Tensor3 {
 public:
  using Index3 = std::array<std::uint32_t, 3>;

  Tensor3() = default;
  Tensor3(std::size_t n1, std::size_t n2, std::size_t n3) : dims_{n1, n2, n3} {}
  static Tensor3 cube(std::size_t n) { return Tensor3(n, n, n); }

  const std::array<std::size_t, 3>& dims() const { return dims_; }
  bool is_cubic() const { return dims_[0] == dims_[1] && dims_[1] == dims_[2]; }
  std::size_t side() const { return std::max({dims_[0], dims_[1], dims_[2]}); }
  const std::map<Index3, T>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  T at(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = entries_.find(key(i, j, k));
    return it == entries_.end() ? T(0) : it->second;
  }

  void set(std::size_t i, std::size_t j, std::size_t k, T value) {
    const Index3 idx = key(i, j, k);
    if (is_zero(value))
      entries_.erase(idx);
    else
      entries_[idx] = std::move(value);
  }

  void add(std::size_t i, std::size_t j, std::size_t k, const T& value) {
    set(i, j, k, at(i, j, k) + value);
  }

  /// Same entries in a cube of side max(n1, n2, n3).
  Tensor3 padded() const {
    Tensor3 out = cube(side());
    out.entries_ = entries_;
    return out;
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  Index3 key(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2])
      throw PreconditionError("tensor index (" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ") outside dims");
    return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
            static_cast<std::uint32_t>(k)};
  }

  std::array<std::size_t, 3> dims_{0, 0, 0};
  std::map<Index3, T> entries_;
};

/// Parity of a permutation by inversion counting: +1 or -1.
int permutation_sign(std::span<const std::uint32_t> perm);

/// Enumerates the nonzero terms prod_i a(i, s1(i), s2(i)) of a cubic tensor
/// by exact-cover backtracking over its nonzero entries.
template <class T>
class TermSearch {
 public:
  explicit TermSearch(const Tensor3<T>& cube) : n_(cube.side()), search_(make(cube)) {}

  std::size_t branch_count() const { return search_.root_branch_count(); }

  /// visit(sigma1, sigma2, product) for every term in root branch `b`.
  template <class Visit>
  void visit(std::size_t b, Visit&& visit) const {
    std::vector<std::uint32_t> s1(n_), s2(n_);
    search_.visit_branch(b, [&](std::span<const std::uint32_t> chosen) {
      T product(1);
      for (std::uint32_t c : chosen) {
        const auto& idx = keys_[c];
        s1[idx[0]] = idx[1];
        s2[idx[0]] = idx[2];
        product *= *values_[c];
      }
      visit(std::span<const std::uint32_t>(s1), std::span<const std::uint32_t>(s2), product);
    });
  }

  template <class Visit>
  void visit_all(Visit&& visit) const {
    for (std::size_t b = 0; b < branch_count(); ++b) this->visit(b, visit);
  }

 private:
  CoverSearch make(const Tensor3<T>& cube) {
    if (!cube.is_cubic()) throw PreconditionError("term search needs a cubic tensor");
    std::vector<CoverSearch::Set> sets;
    for (const auto& [idx, v] : cube.entries()) {
      keys_.push_back(idx);
      values_.push_back(&v);
      sets.push_back({idx[0], static_cast<std::uint32_t>(n_ + idx[1]),
                      static_cast<std::uint32_t>(2 * n_ + idx[2])});
    }
    return CoverSearch(3 * n_, std::move(sets), std::vector<bool>(3 * n_, true));
  }

  std::size_t n_;
  std::vector<typename Tensor3<T>::Index3> keys_;
  std::vector<const T*> values_;
  CoverSearch search_;
};

namespace detail {

template <class T>
T signed_term_sum(const Tensor3<T>& a, bool with_sign, unsigned threads) {
  const Tensor3<T> cube = a.padded();
  if (cube.side() == 0) return T(1);
  const TermSearch<T> search(cube);
  const auto partial = parallel_indexed<T>(search.branch_count(), threads, [&](std::size_t b) {
    T sum(0);
    search.visit(b, [&](auto s1, auto s2, const T& product) {
      if (with_sign && permutation_sign(s1) * permutation_sign(s2) < 0)
        sum -= product;
      else
        sum += product;
    });
    return sum;
  });
  T total(0);
  for (const auto& p : partial) total += p;
  return total;
}

template <class T>
T dense_term_sum(const Tensor3<T>& a, bool with_sign) {
  const Tensor3<T> cube = a.padded();
  const std::size_t n = cube.side();
  if (n > 5) throw GuardExceeded("dense 3-matrix oracle is limited to side 5");
  std::vector<std::uint32_t> s1(n), s2(n);
  std::iota(s1.begin(), s1.end(), 0);
  T total(0);
  do {
    std::iota(s2.begin(), s2.end(), 0);
    do {
      T product(1);
      for (std::size_t i = 0; i < n && !is_zero(product); ++i) product *= cube.at(i, s1[i], s2[i]);
      if (is_zero(product)) continue;
      if (with_sign && permutation_sign(s1) * permutation_sign(s2) < 0)
        total -= product;
      else
        total += product;
    } while (std::next_permutation(s2.begin(), s2.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));
  return total;
}

}  // namespace detail

/// Sum over (s1, s2) in S_n x S_n of prod_i a(i, s1(i), s2(i)); non-cubic
/// tensors are zero-padded first. Sparse backtracking; root branches are
/// spread over `threads` workers and summed in branch order.
template <class T>
T permanent3(const Tensor3<T>& a, unsigned threads = 1) {
  return detail::signed_term_sum(a, false, threads);
}

/// As permanent3, each term weighted by sign(s1) sign(s2).
template <class T>
T determinant3(const Tensor3<T>& a, unsigned threads = 1) {
  return detail::signed_term_sum(a, true, threads);
}

/// Direct double loop over S_n x S_n; side <= 5.
template <class T>
T permanent3_dense(const Tensor3<T>& a) {
  return detail::dense_term_sum(a, false);
}

template <class T>
T determinant3_dense(const Tensor3<T>& a) {
  return detail::dense_term_sum(a, true);
}

/// |E1| x |E2| x |E3| tensor with x^{w(t)} at the class positions of the
/// edges of each triangle t (canonical edge order within a class), padded to
/// a cube. Throws PreconditionError unless `parts` is an edge tripartition.
Tensor3<Polynomial> triadjacency(const TriangularConfiguration& config,
                                 const EdgeTripartition& parts, const Weighting& weighting);

/// Vertex order per class: `order` when given (each list a permutation of
/// its class), otherwise canonical id order.
std::array<std::vector<Id>, 3> vertex_class_order(
    const TriangularConfiguration& config, const VertexTripartition& parts,
    const std::optional<std::array<std::vector<Id>, 3>>& order);

/// Tensor with values[t] at the class positions of the vertices of each
/// triangle t, padded to a cube. Throws PreconditionError unless `parts` is a
/// vertex tripartition and every triangle has a value.
template <class T>
Tensor3<T> vertex_adjacency(const TriangularConfiguration& config, const VertexTripartition& parts,
                            const std::map<Id, T>& values,
                            const std::optional<std::array<std::vector<Id>, 3>>& order = {}) {
  const auto lists = vertex_class_order(config, parts, order);
  std::map<Id, std::uint32_t> position;
  for (const auto& list : lists)
    for (std::uint32_t i = 0; i < list.size(); ++i) position[list[i]] = i;
  Tensor3<T> out(lists[0].size(), lists[1].size(), lists[2].size());
  for (Index t = 0; t < config.triangle_count(); ++t) {
    const auto& id = config.triangles()[t].id;
    auto value = values.find(id);
    if (value == values.end()) throw PreconditionError("no entry value for triangle '" + id + "'");
    std::array<std::uint32_t, 3> at{};
    for (Index v : *config.triangle_vertices(t)) {
      const Id& name = config.vertices()[v];
      at[parts.of(name) - 1] = position.at(name);
    }
    out.set(at[0], at[1], at[2], value->second);
  }
  return out.padded();
}

/// G1 on (axis 0, axis 1) and G2 on (axis 0, axis 2) supports.
struct ProjectionGraphs {
  BipartiteGraph g1;
  BipartiteGraph g2;
};

template <class T>
ProjectionGraphs projection_graphs(const Tensor3<T>& a) {
  std::vector<BipartiteGraph::Edge> e1, e2;
  for (const auto& [idx, v] : a.entries()) {
    e1.emplace_back(idx[0], idx[1]);
    e2.emplace_back(idx[0], idx[2]);
  }
  return {BipartiteGraph(a.dims()[0], a.dims()[1], std::move(e1)),
          BipartiteGraph(a.dims()[0], a.dims()[2], std::move(e2))};
}

/// a'(i,j,k) = s1(i,j) s2(i,k) a(i,j,k). Throws PreconditionError when a
/// needed sign is missing.
template <class T>
Tensor3<T> apply_signing(const Tensor3<T>& a, const EdgeSigning& s1, const EdgeSigning& s2) {
  Tensor3<T> out(a.dims()[0], a.dims()[1], a.dims()[2]);
  for (const auto& [idx, v] : a.entries()) {
    const int s = s1.of({idx[0], idx[1]}) * s2.of({idx[0], idx[2]});
    out.set(idx[0], idx[1], idx[2], s > 0 ? v : -v);
  }
  return out;
}

template <class T>
struct K1Result {
  Tensor3<T> signed_tensor;
  EdgeSigning s1;
  EdgeSigning s2;
  T permanent;
  T determinant;
};

/// Signs both projection graphs by find_pfaffian_signing and verifies
/// determinant3(A') = permanent3(A). nullopt means "not certified", never
/// "not Kasteleyn".
template <class T>
std::optional<K1Result<T>> kasteleyn_sign_via_k1(const Tensor3<T>& a, unsigned threads = 1) {
  const Tensor3<T> cube = a.padded();
  const ProjectionGraphs graphs = projection_graphs(cube);
  auto s1 = find_pfaffian_signing(graphs.g1);
  if (!s1) return std::nullopt;
  auto s2 = find_pfaffian_signing(graphs.g2);
  if (!s2) return std::nullopt;
  K1Result<T> out{apply_signing(cube, *s1, *s2), *s1, *s2, permanent3(cube, threads), T(0)};
  out.determinant = determinant3(out.signed_tensor, threads);
  if (out.determinant != out.permanent) return std::nullopt;
  return out;
}

}  // namespace kas3
