#pragma once

#include "kneser/classifier.hpp"

namespace kneser {

// Straightforward re-checks of classifier witnesses. They use only the set
// representation and interval arithmetic, never the search routines.
namespace validate {

HybridSet naive_sumset(const HybridSet& a, const HybridSet& b);
bool naive_periodic(const HybridSet& s, const Subgroup& k);

bool p_witness(const HybridSet& a, const HybridSet& b, const PWitness& w);
bool e_witness(const HybridSet& a, const HybridSet& b, const EWitness& w);
bool k_witness(const HybridSet& a, const HybridSet& b, const KWitness& w);
bool qp_witness(const HybridSet& a, const HybridSet& b, const QPWitness& w);
// Every witness present in the report validates.
bool report(const HybridSet& a, const HybridSet& b, const ClassificationReport& r);

}  // namespace validate
}  // namespace kneser
