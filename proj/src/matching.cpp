#include "kas3/matching.hpp"

#include "kas3/cover_search.hpp"
#include "kas3/error.hpp"
#include "kas3/parallel.hpp"

#include <algorithm>

namespace kas3 {

namespace {

std::vector<Index> triangle_indices(const TriangularConfiguration& config, const Matching& m) {
  std::vector<Index> out;
  out.reserve(m.size());
  for (const Id& id : m.triangles) {
    auto t = config.triangle_index(id);
    if (!t) throw PreconditionError("unknown triangle '" + id + "' in matching");
    out.push_back(*t);
  }
  return out;
}

CoverSearch edge_cover_problem(const TriangularConfiguration& config,
                               const std::set<Id>& allowed) {
  std::vector<bool> required(config.edge_count(), true);
  for (const Id& e : allowed) {
    auto idx = config.edge_index(e);
    if (!idx) throw PreconditionError("allowed edge '" + e + "' is not an edge of the configuration");
    required[*idx] = false;
  }
  std::vector<CoverSearch::Set> sets;
  sets.reserve(config.triangle_count());
  for (Index t = 0; t < config.triangle_count(); ++t) sets.push_back(config.triangle_edges(t));
  return CoverSearch(config.edge_count(), std::move(sets), std::move(required));
}

std::vector<Matching> collect(const TriangularConfiguration& config, const CoverSearch& search,
                              unsigned threads) {
  auto per_branch = parallel_indexed<std::vector<Matching>>(
      search.root_branch_count(), threads, [&](std::size_t b) {
        std::vector<Matching> found;
        search.visit_branch(b, [&](std::span<const std::uint32_t> chosen) {
          std::vector<Id> ids;
          ids.reserve(chosen.size());
          for (auto t : chosen) ids.push_back(config.triangles()[t].id);
          found.push_back(Matching::from(std::move(ids)));
        });
        return found;
      });
  std::vector<Matching> out;
  for (auto& part : per_branch)
    for (auto& m : part) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void require_matching(const TriangularConfiguration& config, const Matching& matching) {
  std::vector<char> used(config.edge_count(), 0);
  for (Index t : triangle_indices(config, matching)) {
    for (Index e : config.triangle_edges(t)) {
      if (e == TriangularConfiguration::kNoIndex)
        throw PreconditionError("triangle '" + config.triangles()[t].id + "' has a dangling edge");
      if (used[e]) throw PreconditionError("not a matching: edge '" + config.edges()[e].id +
                                           "' is covered twice");
      used[e] = 1;
    }
  }
}

std::set<Id> covered_edges(const TriangularConfiguration& config, const Matching& matching) {
  std::set<Id> out;
  for (Index t : triangle_indices(config, matching))
    for (const Id& e : config.triangles()[t].edges) out.insert(e);
  return out;
}

std::set<Id> defect(const TriangularConfiguration& config, const Matching& matching) {
  require_matching(config, matching);
  const std::set<Id> covered = covered_edges(config, matching);
  std::set<Id> out;
  for (const auto& e : config.edges())
    if (!covered.count(e.id)) out.insert(e.id);
  return out;
}

std::vector<Matching> enumerate_matchings_with_defect_within(const TriangularConfiguration& config,
                                                             const std::set<Id>& allowed,
                                                             unsigned threads) {
  require_valid(config);
  return collect(config, edge_cover_problem(config, allowed), threads);
}

std::vector<Matching> enumerate_perfect_matchings(const TriangularConfiguration& config,
                                                  unsigned threads) {
  return enumerate_matchings_with_defect_within(config, {}, threads);
}

Polynomial perfect_matching_polynomial(const TriangularConfiguration& config,
                                       const Weighting& weighting, unsigned threads) {
  require_valid(config);
  const CoverSearch search = edge_cover_problem(config, {});
  std::vector<std::int64_t> w(config.triangle_count());
  for (Index t = 0; t < config.triangle_count(); ++t) w[t] = weighting.of(config.triangles()[t].id);

  auto parts = parallel_indexed<Polynomial>(search.root_branch_count(), threads, [&](std::size_t b) {
    // Accumulate exponent counts first; one polynomial build per branch.
    std::map<std::int64_t, Integer> counts;
    search.visit_branch(b, [&](std::span<const std::uint32_t> chosen) {
      std::int64_t total = 0;
      for (auto t : chosen) total += w[t];
      counts[total] += 1;
    });
    Polynomial p;
    for (const auto& [e, c] : counts) p.add_term(e, c);
    return p;
  });
  Polynomial out;
  for (const auto& p : parts) out += p;
  return out;
}

std::vector<Matching> enumerate_perfect_strong_matchings(const TriangularConfiguration& config,
                                                         unsigned threads) {
  require_valid(config);
  if (config.edge_count() > 0 && !config.has_vertex_data())
    throw PreconditionError("strong matchings need vertex data on every edge");
  std::vector<CoverSearch::Set> sets;
  sets.reserve(config.triangle_count());
  for (Index t = 0; t < config.triangle_count(); ++t) {
    auto vs = config.triangle_vertices(t);
    if (!vs) throw PreconditionError("triangle '" + config.triangles()[t].id +
                                     "' does not span three vertices");
    sets.push_back(*vs);
  }
  const CoverSearch search(config.vertex_count(), std::move(sets),
                           std::vector<bool>(config.vertex_count(), true));
  return collect(config, search, threads);
}

}  // namespace kas3
