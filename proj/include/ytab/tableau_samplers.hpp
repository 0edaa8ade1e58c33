#pragma once

#include <json.hpp>

#include "ytab/interlacing.hpp"
#include "ytab/jacobi.hpp"
#include "ytab/rng.hpp"
#include "ytab/tableau.hpp"

namespace ytab {

/// Uniform standard Young tableau by the Greene–Nijenhuis–Wilf hook walk:
/// the largest remaining label goes to the corner where a random hook walk
/// ends.
DiscreteTableau sample_syt_hook_walk(const Shape& shape, Rng& rng);

/// Y = Z[X - 1] with Z the increasing rearrangement of mn i.i.d. uniforms.
ContinuousTableau couple_to_continuous(const DiscreteTableau& x, Rng& rng);

/// Uniform element of the continuous n x n tableaux, built diagonal by
/// diagonal: D_k from its Jacobi law, then D_{k-1}..D_1, D_{k+1}..D_n and
/// D_{n+1}..D_{2n-1} from the interlacing conditionals. Conditional sampling
/// failures are rethrown with the stage and diagonal.
ContinuousTableau sample_tableau_diagonal_algorithm(int n, int k, const SamplerConfig& cfg,
                                                    Rng& rng);

/// #SYT / (mn)!, the probability that i.i.d. uniforms on the grid are
/// increasing along rows and columns.
double rejection_tableau_acceptance(const Shape& shape);

/// Exact sampler by rejection from i.i.d. uniforms. Throws InfeasibleError
/// when the acceptance probability is below cfg.min_acceptance.
ContinuousTableau rejection_uniform_tableau(const Shape& shape, const SamplerConfig& cfg,
                                            Rng& rng);

/// One NDJSON record: the sample plus seed, stream and shape.
template <typename T>
nlohmann::json sample_record(const Tableau<T>& t, const SeedSpec& seed);
nlohmann::json sample_record(const DiagonalSample& d, const SeedSpec& seed);

}  // namespace ytab
