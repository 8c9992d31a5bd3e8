#pragma once

#include <stdexcept>
#include <string>

namespace fsw {

// Base for all domain errors. `kind()` is the stable identifier used in
// CLI failure reports.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FSW_DEFINE_ERROR(cls, kind_name)                       \
  class cls : public error {                                   \
   public:                                                     \
    explicit cls(const std::string& what = kind_name)          \
        : error(kind_name, what) {}                            \
  }

FSW_DEFINE_ERROR(zero_element_error, "ZeroElement");
FSW_DEFINE_ERROR(not_in_q_error, "NotInQ");
FSW_DEFINE_ERROR(cap_exceeded_error, "CapExceeded");
FSW_DEFINE_ERROR(bad_support_error, "BadSupport");
FSW_DEFINE_ERROR(hypothesis_error, "HypothesisFailed");
FSW_DEFINE_ERROR(no_nonzero_error, "NoNonzero");
FSW_DEFINE_ERROR(not_in_span_error, "NotInSpan");
FSW_DEFINE_ERROR(not_disjoint_error, "NotDisjoint");
FSW_DEFINE_ERROR(not_independent_error, "NotIndependent");
FSW_DEFINE_ERROR(bad_split_error, "BadSplit");
FSW_DEFINE_ERROR(insufficient_base_error, "InsufficientBase");
FSW_DEFINE_ERROR(bad_partition_error, "BadPartition");
FSW_DEFINE_ERROR(mismatched_ambient_error, "MismatchedAmbient");
FSW_DEFINE_ERROR(supply_exhausted_error, "SupplyExhausted");
FSW_DEFINE_ERROR(no_witness_error, "NoWitness");
FSW_DEFINE_ERROR(insufficient_m_error, "InsufficientM");
FSW_DEFINE_ERROR(parse_error, "ParseError");

#undef FSW_DEFINE_ERROR

// Raised when a result forbidden by one of the verified claims shows up.
// Under checked preconditions these are unreachable; seeing one means the
// implementation, not the mathematics, is wrong.
class claim_violated_error : public error {
 public:
  explicit claim_violated_error(const std::string& what)
      : error("ClaimViolated", what) {}
};

}  // namespace fsw
