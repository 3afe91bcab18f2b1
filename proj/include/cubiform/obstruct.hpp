#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubiform/cubic.hpp"

namespace cubiform {

/// Quadratic form sum_{i <= j} q_ij x_i x_j, zero terms omitted.
using QuadraticForm = std::map<std::pair<int, int>, FieldElem>;

/// A 2 x 2 minor of the Hessian, rows r0 < r1 and columns c0 < c1 (0-based).
struct MinorRef {
  std::array<int, 2> rows{};
  std::array<int, 2> cols{};

  auto operator<=>(const MinorRef&) const = default;
};

/// det of the selected 2 x 2 block of a matrix of linear forms.
QuadraticForm minor_polynomial(const HessianForm& h, const MinorRef& minor);

/// Drops every term that involves a variable in `zeros`.
QuadraticForm reduce_mod_zeros(const QuadraticForm& q, const std::set<int>& zeros);

/// One elimination: modulo `known_zeros_before`, the minor equals
/// coefficient * x_variable^2 with a nonzero coefficient, so x_variable = 0 on
/// the rank <= 1 locus.
struct CertificateStep {
  MinorRef minor;
  std::vector<int> known_zeros_before;  // sorted
  FieldElem coefficient;
  int variable = 0;
};

struct RankCertificate;

/// Case split on a minor that reduces to coefficient * x_first * x_second:
/// cases[0] assumes x_first = 0, cases[1] assumes x_second = 0.
struct CertificateBranch {
  MinorRef minor;
  std::vector<int> known_zeros_before;
  FieldElem coefficient;
  int first = 0;
  int second = 0;
  std::vector<RankCertificate> cases;
};

/// Derivation that the only point where the Hessian has rank <= 1 is 0.
struct RankCertificate {
  std::size_t variables = 0;
  std::vector<CertificateStep> steps;
  std::vector<CertificateBranch> branch;  // empty, or exactly one node

  bool uses_branching() const { return !branch.empty(); }
  /// Number of elimination steps over the whole tree.
  std::size_t step_count() const;
};

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Recomputes every minor of `cert` from `f` and checks each claimed reduction,
/// the order of derived zeros, and that every branch ends with all variables
/// eliminated.
ReplayResult replay_certificate(const CubicForm& f, const RankCertificate& cert);

struct ProverOptions {
  int max_branch_depth = 4;
  unsigned threads = 1;
};

enum class CertifyStatus { Certified, Counterexample, Inconclusive };

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Inconclusive;
  std::optional<RankCertificate> certificate;
  std::optional<Point> counterexample;  // nonzero, Hessian rank <= 1
  std::size_t counterexample_rank = 0;
};

/// Tries to prove that the Hessian of `f` has rank >= 2 at every nonzero point.
///
/// Square-type minors are applied to a fixed point first; only when that
/// stalls does the prover split on a minor of the form c * x_a * x_b, up to
/// `max_branch_depth` nested splits. Ties between eligible minors go to the
/// lexicographically smallest (rows, cols). If no proof is found, coordinate
/// points e_j and e_i +- e_j are probed for a rank <= 1 counterexample.
CertifyResult certify_rank1_trivial(const CubicForm& f, const ProverOptions& options = {});

/// Cubic of a resolved quotient: F_Z(x) + sum a_i y_i^3, a_i = E_i^3.
class ResolutionModel {
 public:
  ResolutionModel(CubicForm fz, std::vector<long> a);

  const CubicForm& fz() const { return fz_; }
  const std::vector<long>& a() const { return a_; }
  std::size_t k() const { return a_.size(); }
  std::size_t size() const { return fz_.size() + a_.size(); }

  /// The full cubic F_X.
  CubicForm full_form() const { return direct_sum_with_cubes(fz_, a_); }

 private:
  CubicForm fz_;
  std::vector<long> a_;
};

struct BlockRank {
  std::size_t rank0 = 0;          // rank of the F_Z block at p0
  std::vector<int> support;       // 0-based i with p1_i != 0
  std::size_t total = 0;
};

BlockRank block_rank(const ResolutionModel& model, std::span<const FieldElem> p);

enum class CandidateKind { Pullback, ExceptionalCombination, NotRankLe2 };

struct CandidateClassification {
  CandidateKind kind = CandidateKind::NotRankLe2;
  std::vector<int> support;  // for ExceptionalCombination
  std::size_t rank = 0;      // total Hessian rank at p
};

/// Sorts a class p = (p0; p1) with Hessian rank <= 2 into the pullback case
/// (rank0 = 2, p1 = 0) or the exceptional case (p0 = 0, at most two
/// exceptional classes). Throws DomainError for p = 0 or an invalid
/// certificate.
CandidateClassification classify_candidate(const ResolutionModel& model, std::span<const FieldElem> p,
                                           const RankCertificate& cert);

enum class VerdictStatus { Obstructed, Inconclusive };

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<RankCertificate> certificate;
  std::optional<Point> counterexample;
  std::vector<std::string> residual_assumptions;
};

/// Geometric steps that finish the argument and are reported, never checked.
const std::vector<std::string>& residual_assumptions();

Verdict decide_blowdown_obstruction(const ResolutionModel& model, const ProverOptions& options = {});

std::string_view to_string(CertifyStatus s);
std::string_view to_string(CandidateKind k);
std::string_view to_string(VerdictStatus s);

}  // namespace cubiform
