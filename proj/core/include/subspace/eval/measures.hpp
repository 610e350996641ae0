#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subspace/cluster.hpp"
#include "subspace/dataset.hpp"

namespace subspace {

// External evaluation measures comparing a found clustering against a
// reference over the same dataset. All scores lie in [0,1], 1 is best.
// Every function checks that both clusterings reference the dataset's n and
// d (DimensionMismatch otherwise). The asymmetric measures (f1p, f1r,
// entropy) refuse an empty reference with EmptyReference; the micro-object
// measures are total, with the degenerate empty cases pinned in each
// contract below.

// Overlap of the micro-object unions: |F n R| / |F u R|; 1 when both
// clusterings are empty. Symmetric.
double eval_rnia(const Clustering& found, const Clustering& ref, const Dataset& data);

// Maximum-weight one-to-one matching of clusters by shared micro-objects,
// normalized by |F u R|; 1 when both clusterings are empty. Symmetric
// under internally disjoint clusterings.
double eval_ce(const Clustering& found, const Clustering& ref, const Dataset& data);

// Mean over found clusters of the best object-set F1 against any reference
// cluster; 0 when found is empty.
double eval_f1p(const Clustering& found, const Clustering& ref, const Dataset& data);

// Mean over reference clusters of the best object-set F1 against any found
// cluster; 0 when found is empty.
double eval_f1r(const Clustering& found, const Clustering& ref, const Dataset& data);

// Harmonic mean of the micro-object-weighted best-match F1 averages taken
// from the found and from the reference side; 0 when either side is 0.
double eval_e4sc(const Clustering& found, const Clustering& ref, const Dataset& data);

// 1 - (weighted mean label entropy of the found clusters) / ln(L), labels
// coming from the reference (uncovered objects form one noise label, an
// object in several reference clusters takes the lowest index). L counts
// the labels present across all objects; score 1 when L = 1, score 0 for
// an empty found clustering.
double eval_entropy(const Clustering& found, const Clustering& ref, const Dataset& data);

enum class PerClusterMeasure { F1P, F1R, E4SC };

// Per-cluster extended results: the best-match score per found cluster
// (F1P, E4SC) or per reference cluster (F1R).
std::vector<std::pair<std::size_t, double>> eval_per_cluster(PerClusterMeasure measure,
                                                             const Clustering& found,
                                                             const Clustering& ref,
                                                             const Dataset& data);

// Name registry used by the CLI: rnia, ce, f1p, f1r, e4sc, entropy.
using MeasureFn = double (*)(const Clustering&, const Clustering&, const Dataset&);
MeasureFn measure_by_name(const std::string& name);  // nullptr when unknown
const std::vector<std::string>& measure_names();

}  // namespace subspace
