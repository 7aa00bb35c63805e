#ifndef QSNELL_VERIFICATION_HPP
#define QSNELL_VERIFICATION_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsnell/scattering.hpp"

// Self-check suites driven by `qsnell verify`.

namespace qsnell
{

enum class VerifyScope
{
  Algebra,
  Dispersion,
  Oracle,
  Pde,
  Identity,
  All,
};

VerifyScope parse_verify_scope(std::string_view text);

enum class CheckStatus
{
  Pass,
  Fail,
  Documented,  ///< expected disagreement with the published formula; never fails the run
};

struct CheckResult
{
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport
{
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  ///< free-form lines, e.g. the identity discrepancy table

  [[nodiscard]] bool passed() const;
};

VerificationReport run_verification(VerifyScope scope, std::span<const EvanescentMode> modes);

void print_report(const VerificationReport& report, std::ostream& out);

}  // namespace qsnell

#endif  // QSNELL_VERIFICATION_HPP
