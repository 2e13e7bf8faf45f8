#ifndef ARCOX_VERIFY_HPP
#define ARCOX_VERIFY_HPP

#include <string>

#include "arcox/embedding.hpp"
#include "arcox/report.hpp"

namespace arcox {

// Rebuilds the cover for (system, phi, k) and scans every pair of cover
// classes for conflicting label witnesses. phi may be unchecked; conflicts
// are reported in the result, never raised.
CheckResult check_well_definedness(const ArtinSystem& system,
                                   const LabelPreservingBijection& phi, int k);

// Relator-respect check. Every relator image is first tested structurally
// (freely trivial, or matching a target relator up to rotation and
// inversion). Images that survive go to an oracle on oracle_system:
//   nullptr                — no oracle, such images count as inconclusive;
//   Coxeter system         — canonical form via elementary-move closure;
//   right-angled Artin     — commuting normal form;
//   other Artin            — distinguisher against the empty word (can prove
//                            a relator broken, never that it holds).
CheckResult check_homomorphism(const std::string& name, const Homomorphism& hom,
                               const ArtinSystem* oracle_system,
                               const ReductionBudget& budget = {});

// Index of the image subgroup in the ambient group: stable-letter exponent
// sums place it inside the kernel (index >= k), coset enumeration pins the
// index to exactly k and separates the transversal. Enumeration overflow
// downgrades the result to inconclusive.
CheckResult check_index(const Pipeline& pipeline, const VerifyOptions& options);

// Samples words of the subgroup, discards duplicates (by group element when
// the base admits stable-letter pinching, by reduced word otherwise) and
// tests that their images stay pairwise distinct. Pairs the distinguisher
// cannot separate are counted, not failed.
CheckResult check_injectivity_samples(const Pipeline& pipeline,
                                      const VerifyOptions& options);

// The full battery in fixed order; every certificate embeds one of these.
VerificationReport run_standard_checks(const Pipeline& pipeline,
                                       const VerifyOptions& options = {});

}  // namespace arcox

#endif  // ARCOX_VERIFY_HPP
