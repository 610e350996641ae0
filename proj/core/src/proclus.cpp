#include "subspace/algo/proclus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "subspace/errors.hpp"
#include "subspace/rng.hpp"

namespace subspace {

namespace {

// Manhattan distance over all dimensions divided by d.
double segmental_full(const Dataset& data, std::size_t a, std::size_t b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < data.dims(); ++j)
    sum += std::abs(data.value(a, j) - data.value(b, j));
  return sum / static_cast<double>(data.dims());
}

// Manhattan distance over the given dimensions divided by their count.
double segmental(const Dataset& data, std::size_t obj, std::size_t medoid,
                 const std::vector<std::size_t>& dims) {
  double sum = 0.0;
  for (std::size_t j : dims) sum += std::abs(data.value(obj, j) - data.value(medoid, j));
  return sum / static_cast<double>(dims.size());
}

struct State {
  std::vector<std::size_t> medoids;                // candidate-pool object ids
  std::vector<std::vector<std::size_t>> dims;      // per medoid, sorted
  std::vector<std::size_t> assignment;             // object -> medoid index
  std::vector<std::vector<std::size_t>> clusters;  // per medoid, sorted members
  double objective = std::numeric_limits<double>::infinity();
};

// Greedy slot allocation: each medoid first receives its two smallest-Z
// dimensions, the remaining k*l - 2k slots go to the globally smallest
// remaining Z values (ties by medoid index, then dimension index).
std::vector<std::vector<std::size_t>> pick_dimensions(
    const std::vector<std::vector<double>>& z, std::size_t l) {
  const std::size_t k = z.size();
  const std::size_t d = z.front().size();
  std::vector<std::vector<std::size_t>> dims(k);
  std::vector<std::vector<bool>> taken(k, std::vector<bool>(d, false));

  for (std::size_t i = 0; i < k; ++i) {
    for (int round = 0; round < 2; ++round) {
      std::size_t best = d;
      for (std::size_t j = 0; j < d; ++j)
        if (!taken[i][j] && (best == d || z[i][j] < z[i][best])) best = j;
      taken[i][best] = true;
      dims[i].push_back(best);
    }
  }

  std::size_t remaining = k * l - 2 * k;
  while (remaining-- > 0) {
    std::size_t bi = k, bj = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!taken[i][j] && (bi == k || z[i][j] < z[bi][bj])) {
          bi = i;
          bj = j;
        }
    taken[bi][bj] = true;
    dims[bi].push_back(bj);
  }

  for (auto& v : dims) std::sort(v.begin(), v.end());
  return dims;
}

// Standardized per-dimension mean distances of each medoid's member set.
std::vector<std::vector<double>> z_scores(const Dataset& data,
                                          const std::vector<std::size_t>& medoids,
                                          const std::vector<std::vector<std::size_t>>& members) {
  const std::size_t k = medoids.size();
  const std::size_t d = data.dims();
  std::vector<std::vector<double>> z(k, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> x(d, 0.0);
    for (std::size_t obj : members[i])
      for (std::size_t j = 0; j < d; ++j)
        x[j] += std::abs(data.value(obj, j) - data.value(medoids[i], j));
    for (std::size_t j = 0; j < d; ++j) x[j] /= static_cast<double>(members[i].size());

    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(d);
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    const double sd = d > 1 ? std::sqrt(var / static_cast<double>(d - 1)) : 0.0;
    for (std::size_t j = 0; j < d; ++j) z[i][j] = sd > 0.0 ? (x[j] - mean) / sd : 0.0;
  }
  return z;
}

void assign_objects(const Dataset& data, State& state) {
  const std::size_t k = state.medoids.size();
  state.assignment.assign(data.size(), 0);
  state.clusters.assign(k, {});
  double total = 0.0;
  for (std::size_t obj = 0; obj < data.size(); ++obj) {
    std::size_t best = 0;
    double best_dist = segmental(data, obj, state.medoids[0], state.dims[0]);
    for (std::size_t i = 1; i < k; ++i) {
      const double dist = segmental(data, obj, state.medoids[i], state.dims[i]);
      if (dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    state.assignment[obj] = best;
    state.clusters[best].push_back(obj);
    total += best_dist;
  }
  state.objective = total / static_cast<double>(data.size());
}

// Localities: every object within delta_i of medoid i, where delta_i is the
// minimum full-space segmental distance to another medoid (for k = 1, the
// maximum distance to any sample point).
std::vector<std::vector<std::size_t>> localities(const Dataset& data,
                                                 const std::vector<std::size_t>& medoids,
                                                 const std::vector<std::size_t>& sample) {
  const std::size_t k = medoids.size();
  std::vector<double> delta(k, 0.0);
  if (k == 1) {
    for (std::size_t obj : sample)
      delta[0] = std::max(delta[0], segmental_full(data, obj, medoids[0]));
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      delta[i] = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < k; ++q)
        if (q != i)
          delta[i] = std::min(delta[i], segmental_full(data, medoids[i], medoids[q]));
    }
  }
  std::vector<std::vector<std::size_t>> loc(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t obj = 0; obj < data.size(); ++obj)
      if (segmental_full(data, obj, medoids[i]) <= delta[i]) loc[i].push_back(obj);
  return loc;
}

State evaluate(const Dataset& data, std::vector<std::size_t> medoids,
               const std::vector<std::size_t>& sample, std::size_t l) {
  State state;
  state.medoids = std::move(medoids);
  const auto loc = localities(data, state.medoids, sample);
  state.dims = pick_dimensions(z_scores(data, state.medoids, loc), l);
  assign_objects(data, state);
  return state;
}

}  // namespace

ProclusResult run_proclus_detailed(const Dataset& data, const ProclusParams& params) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  if (n < params.k) throw InsufficientData("proclus needs n >= k");
  if (params.l > d) throw InvalidParams("l must be <= d");

  Rng rng(params.seed);

  // Phase 1: sample, then greedily pick well-scattered candidates.
  const std::size_t sample_size = std::min(n, params.sample_factor * params.k);
  std::vector<std::size_t> sample = rng.sample(n, sample_size);
  std::sort(sample.begin(), sample.end());

  const std::size_t candidate_count =
      std::min(sample.size(), params.candidate_factor * params.k);
  std::vector<std::size_t> candidates;
  std::vector<bool> used(sample.size(), false);
  candidates.push_back(sample.front());  // lowest id in the sample
  used[0] = true;
  std::vector<double> min_dist(sample.size(), std::numeric_limits<double>::infinity());
  while (candidates.size() < candidate_count) {
    for (std::size_t s = 0; s < sample.size(); ++s)
      if (!used[s])
        min_dist[s] = std::min(min_dist[s],
                               segmental_full(data, sample[s], candidates.back()));
    std::size_t best = sample.size();
    for (std::size_t s = 0; s < sample.size(); ++s)
      if (!used[s] && (best == sample.size() || min_dist[s] > min_dist[best])) best = s;
    used[best] = true;
    candidates.push_back(sample[best]);
  }

  if (candidates.size() < params.k)
    throw InsufficientData("proclus found fewer candidate medoids than k");

  // Phase 2: hill climbing over medoid sets.
  std::vector<std::size_t> initial(candidates.begin(),
                                   candidates.begin() + static_cast<std::ptrdiff_t>(params.k));
  State best = evaluate(data, initial, sample, params.l);
  std::vector<double> accepted{best.objective};

  const std::size_t max_stale = std::max<std::size_t>(20, 5 * params.k);
  std::size_t stale = 0;
  while (stale < max_stale) {
    std::vector<std::size_t> pool;
    for (std::size_t c : candidates)
      if (std::find(best.medoids.begin(), best.medoids.end(), c) == best.medoids.end())
        pool.push_back(c);
    if (pool.empty()) break;

    // Swap out the medoid of the smallest cluster (ties: lowest index).
    std::size_t smallest = 0;
    for (std::size_t i = 1; i < params.k; ++i)
      if (best.clusters[i].size() < best.clusters[smallest].size()) smallest = i;

    std::vector<std::size_t> trial_medoids = best.medoids;
    trial_medoids[smallest] = pool[rng.index(pool.size())];
    State trial = evaluate(data, std::move(trial_medoids), sample, params.l);
    if (trial.objective < best.objective) {
      best = std::move(trial);
      accepted.push_back(best.objective);
      stale = 0;
    } else {
      ++stale;
    }
  }

  // Phase 3: refine dimensions from the final clusters, reassign once, then
  // drop objects outside their medoid's sphere of influence.
  std::vector<std::vector<std::size_t>> members = best.clusters;
  for (std::size_t i = 0; i < params.k; ++i)
    if (members[i].empty()) members[i].push_back(best.medoids[i]);
  best.dims = pick_dimensions(z_scores(data, best.medoids, members), params.l);
  assign_objects(data, best);

  std::vector<double> influence(params.k, 0.0);
  if (params.k == 1) {
    for (std::size_t obj : sample)
      influence[0] = std::max(influence[0], segmental(data, obj, best.medoids[0], best.dims[0]));
  } else {
    for (std::size_t i = 0; i < params.k; ++i) {
      influence[i] = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < params.k; ++q)
        if (q != i)
          influence[i] = std::min(
              influence[i], segmental(data, best.medoids[q], best.medoids[i], best.dims[i]));
    }
  }

  std::vector<SubspaceCluster> result;
  for (std::size_t i = 0; i < params.k; ++i) {
    std::vector<std::size_t> kept;
    for (std::size_t obj : best.clusters[i])
      if (segmental(data, obj, best.medoids[i], best.dims[i]) <= influence[i])
        kept.push_back(obj);
    if (!kept.empty()) result.emplace_back(std::move(kept), best.dims[i]);
  }
  return ProclusResult{Clustering(std::move(result), n, d), std::move(best.medoids),
                       std::move(best.dims), std::move(accepted)};
}

Clustering run_proclus(const Dataset& data, const ProclusParams& params) {
  return run_proclus_detailed(data, params).clustering;
}

}  // namespace subspace
