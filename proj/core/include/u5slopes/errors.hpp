#pragma once

#include <stdexcept>
#include <string>

namespace u5s {

// Error taxonomy. The CLI maps precision-type failures to exit code 2 and
// mathematical failures to exit code 1.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct context_error : error { using error::error; };        // mixed precision contexts
struct domain_error : error { using error::error; };         // argument outside the math domain
struct valuation_error : error { using error::error; };      // unit/divisibility precondition broken
struct hensel_error : error { using error::error; };         // seed is not a simple root
struct inversion_error : error { using error::error; };      // series not invertible with integral scale
struct normalization_error : error { using error::error; };  // scale/integrality failure at assembly
struct degree_error : error { using error::error; };         // column degree assertion failed
struct identity_error : error { using error::error; };       // modular-equation identity failed
struct counting_error : error { using error::error; };       // classical slope count inconsistent
struct precision_error : error { using error::error; };      // undecidable at working precision
struct instability_error : precision_error { using precision_error::precision_error; };

}  // namespace u5s
