#include "cubiform/obstruct.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <thread>

namespace cubiform {

namespace {

struct Minor {
  MinorRef ref;
  QuadraticForm poly;
};

void add_product(QuadraticForm& q, const LinearForm& u, const LinearForm& v, bool negate) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      std::pair<int, int> key = std::minmax(static_cast<int>(i), static_cast<int>(j));
      FieldElem term = u[i] * v[j];
      auto [it, fresh] = q.try_emplace(key, FieldElem::zero(term.tag()));
      it->second = negate ? it->second - term : it->second + term;
      if (it->second.is_zero()) q.erase(it);
    }
  }
}

std::vector<Minor> all_minors(const HessianForm& h) {
  const int m = static_cast<int>(h.size());
  std::vector<Minor> out;
  for (int r0 = 0; r0 < m; ++r0)
    for (int r1 = r0 + 1; r1 < m; ++r1)
      for (int c0 = 0; c0 < m; ++c0)
        for (int c1 = c0 + 1; c1 < m; ++c1) {
          MinorRef ref{{r0, r1}, {c0, c1}};
          QuadraticForm q = minor_polynomial(h, ref);
          if (!q.empty()) out.push_back({ref, std::move(q)});
        }
  return out;
}

// x_alpha with c * x_alpha^2 as the only surviving term, or nullopt.
std::optional<std::pair<int, FieldElem>> as_square(const QuadraticForm& q) {
  if (q.size() != 1) return std::nullopt;
  const auto& [key, c] = *q.begin();
  if (key.first != key.second) return std::nullopt;
  return std::make_pair(key.first, c);
}

std::optional<std::pair<std::pair<int, int>, FieldElem>> as_cross(const QuadraticForm& q) {
  if (q.size() != 1) return std::nullopt;
  const auto& [key, c] = *q.begin();
  if (key.first == key.second) return std::nullopt;
  return std::make_pair(key, c);
}

class Prover {
 public:
  Prover(const CubicForm& f, const ProverOptions& options)
      : m_(f.size()), options_(options), minors_(all_minors(hessian_form(f))) {}

  std::optional<RankCertificate> prove(std::set<int> zeros, int depth) const {
    RankCertificate cert;
    cert.variables = m_;
    while (zeros.size() < m_) {
      std::vector<CertificateStep> round = closure_round(zeros);
      if (round.empty()) break;
      for (CertificateStep& s : round) {
        zeros.insert(s.variable);
        cert.steps.push_back(std::move(s));
      }
    }
    if (zeros.size() == m_) return cert;
    if (depth >= options_.max_branch_depth) return std::nullopt;

    for (const Minor& minor : minors_) {
      auto cross = as_cross(reduce_mod_zeros(minor.poly, zeros));
      if (!cross) continue;
      auto [vars, c] = *cross;
      CertificateBranch node{minor.ref, {zeros.begin(), zeros.end()}, c, vars.first, vars.second, {}};
      for (int assumed : {vars.first, vars.second}) {
        std::set<int> sub = zeros;
        sub.insert(assumed);
        auto child = prove(std::move(sub), depth + 1);
        if (!child) return std::nullopt;
        node.cases.push_back(std::move(*child));
      }
      cert.branch.push_back(std::move(node));
      return cert;
    }
    return std::nullopt;
  }

 private:
  struct Found {
    std::size_t minor_index = std::numeric_limits<std::size_t>::max();
    FieldElem coefficient;
  };

  // For every variable that some square-type minor eliminates, keeps the
  // lexicographically first such minor in [begin, end).
  void scan(std::size_t begin, std::size_t end, const std::set<int>& zeros, std::vector<Found>& found) const {
    for (std::size_t idx = begin; idx < end; ++idx) {
      auto sq = as_square(reduce_mod_zeros(minors_[idx].poly, zeros));
      if (!sq) continue;
      Found& slot = found[sq->first];
      if (idx < slot.minor_index) slot = {idx, sq->second};
    }
  }

  std::vector<CertificateStep> closure_round(const std::set<int>& zeros) const {
    const unsigned threads = std::max(1u, std::min<unsigned>(options_.threads, minors_.size() / 64 + 1));
    std::vector<std::vector<Found>> partial(threads, std::vector<Found>(m_));
    const std::size_t chunk = (minors_.size() + threads - 1) / threads;
    if (threads == 1) {
      scan(0, minors_.size(), zeros, partial[0]);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = std::min(minors_.size(), t * chunk);
        std::size_t end = std::min(minors_.size(), begin + chunk);
        pool.emplace_back([&, t, begin, end] { scan(begin, end, zeros, partial[t]); });
      }
    }
    std::vector<Found> merged(m_);
    for (const auto& part : partial)
      for (std::size_t v = 0; v < m_; ++v)
        if (part[v].minor_index < merged[v].minor_index) merged[v] = part[v];

    std::vector<CertificateStep> steps;
    const std::vector<int> before(zeros.begin(), zeros.end());
    for (std::size_t v = 0; v < m_; ++v) {
      if (merged[v].minor_index == std::numeric_limits<std::size_t>::max()) continue;
      steps.push_back({minors_[merged[v].minor_index].ref, before, merged[v].coefficient, static_cast<int>(v)});
    }
    std::sort(steps.begin(), steps.end(), [](const CertificateStep& a, const CertificateStep& b) {
      return std::tie(a.minor, a.variable) < std::tie(b.minor, b.variable);
    });
    return steps;
  }

  std::size_t m_;
  ProverOptions options_;
  std::vector<Minor> minors_;
};

std::optional<Point> probe_counterexample(const CubicForm& f, std::size_t& rank_out) {
  const std::size_t m = f.size();
  const FieldElem one = FieldElem::one(f.tag());
  auto try_point = [&](const Point& p) {
    rank_out = hessian_rank_at(f, p);
    return rank_out <= 1;
  };
  for (std::size_t j = 0; j < m; ++j) {
    Point p(m, FieldElem::zero(f.tag()));
    p[j] = one;
    if (try_point(p)) return p;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (const FieldElem& s : {one, -one}) {
        Point p(m, FieldElem::zero(f.tag()));
        p[i] = one;
        p[j] = s;
        if (try_point(p)) return p;
      }
  return std::nullopt;
}

bool subset(const std::vector<int>& claimed, const std::set<int>& derived) {
  return std::all_of(claimed.begin(), claimed.end(), [&](int v) { return derived.contains(v); });
}

bool valid_ref(const MinorRef& r, std::size_t m) {
  const int n = static_cast<int>(m);
  return r.rows[0] >= 0 && r.rows[0] < r.rows[1] && r.rows[1] < n && r.cols[0] >= 0 && r.cols[0] < r.cols[1] &&
         r.cols[1] < n;
}

std::string replay(const HessianForm& h, const RankCertificate& cert, std::set<int> derived) {
  const std::size_t m = h.size();
  if (cert.variables != m) return "certificate is for " + std::to_string(cert.variables) + " variables";
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const CertificateStep& step = cert.steps[s];
    const std::string where = "step " + std::to_string(s + 1) + ": ";
    if (!valid_ref(step.minor, m)) return where + "minor index out of range";
    if (!std::is_sorted(step.known_zeros_before.begin(), step.known_zeros_before.end()))
      return where + "known zeros not sorted";
    if (!subset(step.known_zeros_before, derived)) return where + "uses a zero that has not been derived";
    if (step.coefficient.is_zero()) return where + "zero coefficient";
    std::set<int> before(step.known_zeros_before.begin(), step.known_zeros_before.end());
    QuadraticForm reduced = reduce_mod_zeros(minor_polynomial(h, step.minor), before);
    auto sq = as_square(reduced);
    if (!sq || sq->first != step.variable || !(sq->second == step.coefficient))
      return where + "minor does not reduce to the stated multiple of x" + std::to_string(step.variable + 1) + "^2";
    derived.insert(step.variable);
  }
  if (cert.branch.size() > 1) return "more than one branch node";
  if (cert.branch.empty()) {
    if (derived.size() != m) return "not every variable is eliminated";
    return {};
  }
  const CertificateBranch& node = cert.branch.front();
  if (!valid_ref(node.minor, m)) return "branch minor index out of range";
  if (!subset(node.known_zeros_before, derived)) return "branch uses a zero that has not been derived";
  if (node.cases.size() != 2) return "branch must have exactly two cases";
  if (node.coefficient.is_zero() || node.first == node.second) return "degenerate branch minor";
  std::set<int> before(node.known_zeros_before.begin(), node.known_zeros_before.end());
  auto cross = as_cross(reduce_mod_zeros(minor_polynomial(h, node.minor), before));
  if (!cross || cross->first != std::pair(node.first, node.second) || !(cross->second == node.coefficient))
    return "branch minor does not reduce to the stated product";
  int assumed[2] = {node.first, node.second};
  for (int c = 0; c < 2; ++c) {
    std::set<int> sub = derived;
    sub.insert(assumed[c]);
    if (auto err = replay(h, node.cases[c], std::move(sub)); !err.empty())
      return "case x" + std::to_string(assumed[c] + 1) + "=0: " + err;
  }
  return {};
}

}  // namespace

QuadraticForm minor_polynomial(const HessianForm& h, const MinorRef& minor) {
  QuadraticForm q;
  const auto [r0, r1] = minor.rows;
  const auto [c0, c1] = minor.cols;
  add_product(q, h(r0, c0), h(r1, c1), false);
  add_product(q, h(r0, c1), h(r1, c0), true);
  return q;
}

QuadraticForm reduce_mod_zeros(const QuadraticForm& q, const std::set<int>& zeros) {
  QuadraticForm out;
  for (const auto& [key, c] : q) {
    if (!zeros.contains(key.first) && !zeros.contains(key.second)) out.emplace(key, c);
  }
  return out;
}

std::size_t RankCertificate::step_count() const {
  std::size_t n = steps.size();
  for (const auto& b : branch)
    for (const auto& c : b.cases) n += c.step_count();
  return n;
}

ReplayResult replay_certificate(const CubicForm& f, const RankCertificate& cert) {
  std::string err = replay(hessian_form(f), cert, {});
  return {err.empty(), err};
}

CertifyResult certify_rank1_trivial(const CubicForm& f, const ProverOptions& options) {
  CertifyResult result;
  if (auto cert = Prover(f, options).prove({}, 0)) {
    result.status = CertifyStatus::Certified;
    result.certificate = std::move(cert);
    return result;
  }
  std::size_t r = 0;
  if (auto p = probe_counterexample(f, r)) {
    result.status = CertifyStatus::Counterexample;
    result.counterexample = std::move(p);
    result.counterexample_rank = r;
  }
  return result;
}

ResolutionModel::ResolutionModel(CubicForm fz, std::vector<long> a) : fz_(std::move(fz)), a_(std::move(a)) {
  if (a_.empty()) throw DomainError("a resolution model needs at least one exceptional divisor (k >= 1)");
  for (long ai : a_) {
    if (ai == 0) throw DomainError("exceptional self-intersection a_i = E_i^3 must be a nonzero integer");
  }
}

BlockRank block_rank(const ResolutionModel& model, std::span<const FieldElem> p) {
  if (p.size() != model.size()) {
    throw DimensionError("point has " + std::to_string(p.size()) + " coordinates, model has " +
                         std::to_string(model.size()));
  }
  const std::size_t m = model.fz().size();
  BlockRank br;
  br.rank0 = hessian_rank_at(model.fz(), p.first(m));
  for (std::size_t i = 0; i < model.k(); ++i) {
    if (p[m + i].tag() != model.fz().tag()) throw FieldError("point field does not match model field");
    if (!p[m + i].is_zero()) br.support.push_back(static_cast<int>(i));
  }
  br.total = br.rank0 + br.support.size();
  return br;
}

CandidateClassification classify_candidate(const ResolutionModel& model, std::span<const FieldElem> p,
                                           const RankCertificate& cert) {
  if (std::all_of(p.begin(), p.end(), [](const FieldElem& x) { return x.is_zero(); })) {
    throw DomainError("the zero class is not a candidate");
  }
  if (auto r = replay_certificate(model.fz(), cert); !r.ok) {
    throw DomainError("invalid rank certificate: " + r.message);
  }
  const BlockRank br = block_rank(model, p);
  CandidateClassification out;
  out.rank = br.total;
  if (br.total > 2) {
    out.kind = CandidateKind::NotRankLe2;
  } else if (br.rank0 == 2) {
    out.kind = CandidateKind::Pullback;
  } else {
    auto p0 = p.first(model.fz().size());
    if (!std::all_of(p0.begin(), p0.end(), [](const FieldElem& x) { return x.is_zero(); })) {
      throw std::logic_error("certified form has a nonzero point of Hessian rank <= 1");
    }
    out.kind = CandidateKind::ExceptionalCombination;
    out.support = br.support;
  }
  return out;
}

const std::vector<std::string>& residual_assumptions() {
  static const std::vector<std::string> list = {
      "pullback case (p1 = 0): E is numerically f*D for a pseudo-effective Cartier divisor D on Z; "
      "rho*D is nef on the abelian cover, hence E is nef, contradicting that E is exceptional [unchecked]",
      "exceptional case (p0 = 0): negativity lemma, E_s is covered by rational curves C with E_s.C < 0, "
      "and E_s, E_t are disjoint, so E contains E_s and E = E_s [unchecked]",
      "E is a prime, effective, non-trivial divisor [unchecked]",
      "Z is Q-factorial, so g contracts E = E_s to a point rather than through a small contraction [unchecked]",
      "the quotient map A -> Z is etale in codimension 2 and its degree equals the group order [unchecked]",
  };
  return list;
}

Verdict decide_blowdown_obstruction(const ResolutionModel& model, const ProverOptions& options) {
  Verdict v;
  v.residual_assumptions = residual_assumptions();
  CertifyResult r = certify_rank1_trivial(model.fz(), options);
  if (r.status == CertifyStatus::Certified) {
    v.status = VerdictStatus::Obstructed;
    v.certificate = std::move(r.certificate);
  } else {
    v.status = VerdictStatus::Inconclusive;
    v.counterexample = std::move(r.counterexample);
  }
  return v;
}

std::string_view to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Certified: return "CERTIFIED";
    case CertifyStatus::Counterexample: return "COUNTEREXAMPLE";
    case CertifyStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(CandidateKind k) {
  switch (k) {
    case CandidateKind::Pullback: return "PULLBACK";
    case CandidateKind::ExceptionalCombination: return "EXCEPTIONAL_COMBINATION";
    case CandidateKind::NotRankLe2: return "NOT_RANK_LE_2";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "OBSTRUCTED";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace cubiform
