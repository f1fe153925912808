#include "ginv/law_eval.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "ginv/error.hpp"
#include "ginv/inverses.hpp"
#include "ginv/linalg.hpp"
#include "ginv/matrix_gen.hpp"

namespace ginv {

std::string_view status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Vacuous: return "vacuous";
    case ReportStatus::NotNecessary: return "not-necessary";
    case ReportStatus::NoWitness: return "no-witness";
  }
  return "?";
}

nlohmann::json binding_to_json(const BindingRecord& b) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [k, v] : b.values) values[k] = v;
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [k, v] : b.witnesses) witnesses[k] = v;
  nlohmann::json j = {{"values", values}, {"witnesses", witnesses}};
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : r.counterexamples) ces.push_back(binding_to_json(c));
  return {{"law", r.law},
          {"carrier", r.carrier},
          {"mode", r.mode},
          {"status", status_name(r.status)},
          {"bindings_total", r.bindings_total},
          {"bindings_checked", r.bindings_checked},
          {"counterexample_count", r.counterexample_count},
          {"counterexamples", ces},
          {"flags", r.flags},
          {"warnings", r.warnings},
          {"budget_exceeded", r.budget_exceeded}};
}

bool RingCarrier::included(SetKind s, Code a, Code b) const {
  switch (s) {
    case SetKind::RightIdeal: return oracle_.right_ideal_in(a, b);
    case SetKind::LeftIdeal: return oracle_.left_ideal_in(a, b);
    case SetKind::LeftAnn: return oracle_.left_ann_in(a, b);
    case SetKind::RightAnn: return oracle_.right_ann_in(a, b);
  }
  return false;
}

namespace {

template <class C>
std::vector<C> dedup(std::vector<C> xs) {
  std::vector<C> out;
  for (auto& x : xs) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Matrix> wd_witnesses(const Matrix& v, std::size_t family) {
  std::vector<Matrix> out{wd_canonical(v).value};
  for (auto& r : wd_family_sample(v, 0, family)) out.push_back(std::move(r.value));
  return dedup(std::move(out));
}

}  // namespace

std::vector<Matrix> MatrixCarrier::witnesses(const Matrix& v, InverseKind kind) const {
  switch (kind) {
    case InverseKind::GROUP:
    case InverseKind::CORE:
      if (drazin_index(v).index > 1) return {};
      return {compute_inverse(kind, v).value};
    case InverseKind::WD: return wd_witnesses(v, cfg_.wd_family);
    case InverseKind::WDMP: {
      const Matrix tail = v * mp_inverse(v).value;
      std::vector<Matrix> out;
      for (const auto& w : wd_witnesses(v, cfg_.wd_family)) out.push_back(w * tail);
      return dedup(std::move(out));
    }
    default: return {compute_inverse(kind, v).value};
  }
}

bool MatrixCarrier::member(const Matrix& x, InverseKind kind, const Matrix& v) const {
  const unsigned k = positive_index(v);
  if (kind == InverseKind::WDMP) {
    const Matrix w = wd_canonical(v).value;
    return verify_definition(kind, v, x, k, &w);
  }
  return verify_definition(kind, v, x, k);
}

unsigned MatrixCarrier::index(const Matrix& v) const { return positive_index(v); }
bool MatrixCarrier::nilpotent(const Matrix& v) const { return is_nilpotent(v); }
bool MatrixCarrier::hirano(const Matrix& v) const { return hirano_invertible(v); }

bool MatrixCarrier::included(SetKind s, const Matrix& a, const Matrix& b) const {
  switch (s) {
    case SetKind::RightIdeal: return range_included(a, b);
    case SetKind::LeftIdeal: return row_space_included(a, b);
    case SetKind::LeftAnn: return left_annihilator_included(a, b);
    case SetKind::RightAnn: return right_annihilator_included(a, b);
  }
  return false;
}

std::size_t MatrixCarrier::sample(std::uint64_t seed, std::size_t vars, std::vector<Matrix>& out) const {
  MatrixGenerator gen(seed);
  const std::size_t n = 1 + gen.below(cfg_.max_dim);
  const Field field = gen.below(100) < cfg_.complex_percent ? Field::QI : Field::Q;
  out.clear();
  switch (gen.below(5)) {
    case 0:
      for (std::size_t i = 0; i < vars; ++i) out.push_back(gen.any(n, field));
      break;
    case 1: {
      // Polynomials in one matrix commute with each other.
      const Matrix base = gen.any(n, field);
      const Matrix sq = base * base;
      const Matrix one = Matrix::identity(n, field);
      for (std::size_t i = 0; i < vars; ++i) {
        if (gen.below(4) == 0) {
          out.push_back(base);
          continue;
        }
        const Scalar c0(gen.between(-1, 1));
        const Scalar c1(gen.between(-1, 2));
        const Scalar c2(gen.between(-1, 1));
        out.push_back(c0 * one + c1 * base + c2 * sq);
      }
      break;
    }
    case 2: {
      // Disjoint diagonal blocks under one signed permutation: products and
      // cross terms with the involution vanish.
      const std::size_t blocks = std::max<std::size_t>(1, std::min(vars, n));
      std::vector<std::size_t> cuts{0};
      for (std::size_t b = 1; b < blocks; ++b) cuts.push_back(b);
      for (std::size_t b = 1; b < blocks; ++b) cuts[b] += gen.below(n - blocks + 1);
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(n);
      const Matrix u = gen.signed_permutation(n, field);
      const Matrix ut = u.conj_transpose();
      for (std::size_t i = 0; i < vars; ++i) {
        const std::size_t b = i % blocks;
        const std::size_t lo = cuts[b];
        const std::size_t size = cuts[b + 1] - lo;
        Matrix m = Matrix::zero(n, field);
        if (size > 0) {
          const Matrix block = gen.any(size, field);
          for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) m(lo + r, lo + c) = block(r, c);
          }
        }
        out.push_back(u * m * ut);
      }
      break;
    }
    case 3:
      for (std::size_t i = 0; i < vars; ++i) {
        switch (gen.below(7)) {
          case 0: out.push_back(gen.hermitian(n, field)); break;
          case 1: out.push_back(gen.idempotent(n, field)); break;
          case 2: out.push_back(gen.hermitian_projector(n, field)); break;
          case 3: out.push_back(gen.ep(n, field)); break;
          case 4: out.push_back(gen.nilpotent(n, field)); break;
          case 5: out.push_back(gen.invertible(n, field)); break;
          default: out.push_back(gen.mixed_index(n, field)); break;
        }
      }
      break;
    default: {
      // Real diagonal matrices under one signed permutation: commuting and
      // Hermitian, idempotent when the diagonal is 0/1.
      const Matrix u = gen.signed_permutation(n, field);
      const Matrix ut = u.conj_transpose();
      const bool projectors = gen.coin();
      for (std::size_t i = 0; i < vars; ++i) {
        Matrix d = Matrix::zero(n, field);
        for (std::size_t r = 0; r < n; ++r) {
          std::int64_t e = static_cast<std::int64_t>(gen.below(2));
          if (!projectors && gen.below(3) == 0) e = gen.coin() ? 2 : -1;
          d(r, r) = Scalar(e);
        }
        out.push_back(u * d * ut);
      }
      break;
    }
  }
  return n;
}

namespace {

struct Slot {
  std::string key;
  InverseKind kind = InverseKind::MP;
  const Term* operand = nullptr;
  int var = -1;
  bool hypothesis = false;
};

struct Compiled {
  const Law* law = nullptr;
  std::string text;
  std::vector<Slot> slots;
  std::unordered_map<const Term*, int> slot_of;
  std::unordered_map<const Term*, int> var_of;
  std::vector<int> hyp_ready;
  std::vector<std::vector<InverseKind>> var_kinds;
  std::vector<InverseKind> kinds_used;
  std::vector<SetKind> sets_used;
  bool uses_index = false;
  bool uses_hirano = false;
  bool uses_nilpotent = false;
};

void note_kind(Compiled& c, InverseKind k) {
  if (std::find(c.kinds_used.begin(), c.kinds_used.end(), k) == c.kinds_used.end()) c.kinds_used.push_back(k);
}

void collect(const Term& t, Compiled& c, bool hyp, std::unordered_map<std::string, int>& by_key, int& max_slot) {
  if (t.lhs) collect(*t.lhs, c, hyp, by_key, max_slot);
  if (t.rhs) collect(*t.rhs, c, hyp, by_key, max_slot);
  switch (t.op) {
    case Term::Op::Var: {
      const auto& vars = c.law->variables;
      c.var_of[&t] = static_cast<int>(std::find(vars.begin(), vars.end(), t.name) - vars.begin());
      break;
    }
    case Term::Op::PowIndex: c.uses_index = true; break;
    case Term::Op::Inverse: {
      const std::string key = print_term(t);
      auto it = by_key.find(key);
      int id;
      if (it == by_key.end()) {
        id = static_cast<int>(c.slots.size());
        Slot s;
        s.key = key;
        s.kind = t.kind;
        s.operand = t.lhs.get();
        s.hypothesis = hyp;
        if (t.lhs->op == Term::Op::Var) {
          s.var = c.var_of.at(t.lhs.get());
          auto& ks = c.var_kinds[static_cast<std::size_t>(s.var)];
          if (std::find(ks.begin(), ks.end(), t.kind) == ks.end()) ks.push_back(t.kind);
        }
        c.slots.push_back(s);
        by_key.emplace(key, id);
        note_kind(c, t.kind);
      } else {
        id = it->second;
      }
      c.slot_of[&t] = id;
      max_slot = std::max(max_slot, id);
      break;
    }
    default: break;
  }
}

void collect(const Formula& f, Compiled& c, bool hyp, std::unordered_map<std::string, int>& by_key, int& max_slot) {
  if (f.lhs) collect(*f.lhs, c, hyp, by_key, max_slot);
  if (f.rhs) collect(*f.rhs, c, hyp, by_key, max_slot);
  switch (f.type) {
    case Formula::Type::Membership:
    case Formula::Type::Has: note_kind(c, f.kind); break;
    case Formula::Type::Inclusion:
    case Formula::Type::SetEqual:
      if (std::find(c.sets_used.begin(), c.sets_used.end(), f.set) == c.sets_used.end()) c.sets_used.push_back(f.set);
      break;
    case Formula::Type::Hirano: c.uses_hirano = true; break;
    case Formula::Type::Nilpotent: c.uses_nilpotent = true; break;
    default: break;
  }
}

Compiled compile(const Law& law) {
  Compiled c;
  c.law = &law;
  c.text = print_law(law);
  c.var_kinds.resize(law.variables.size());
  std::unordered_map<std::string, int> by_key;
  for (const auto& h : law.hypotheses) {
    int ready = -1;
    collect(h, c, true, by_key, ready);
    c.hyp_ready.push_back(ready);
  }
  int ignored = -1;
  collect(law.conclusion, c, false, by_key, ignored);
  return c;
}

const MatrixAlgebra kMatrixAlgebra{};
const FiniteRing& algebra_of(const RingCarrier& c) { return c.algebra(); }
const MatrixAlgebra& algebra_of(const MatrixCarrier&) { return kMatrixAlgebra; }

struct Partial {
  std::uint64_t total = 0;
  std::uint64_t checked = 0;
  std::uint64_t fails = 0;
  std::vector<BindingRecord> records;
};

void absorb(Partial& into, Partial&& from, std::size_t limit) {
  into.total += from.total;
  into.checked += from.checked;
  into.fails += from.fails;
  for (auto& r : from.records) {
    if (into.records.size() >= limit) break;
    into.records.push_back(std::move(r));
  }
}

template <class C>
class Runner {
 public:
  using V = typename C::Value;

  Runner(const C& carrier, const Compiled& cl, bool probe, std::size_t limit)
      : carrier_(carrier), alg_(algebra_of(carrier)), cl_(cl), probe_(probe), limit_(limit) {}

  /// All bindings of one variable assignment.
  void run(const std::vector<V>& vars, const V& zero, const V& one, Partial& out) {
    vars_ = &vars;
    zero_ = &zero;
    one_ = &one;
    out_ = &out;
    ++out.total;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (auto kind : cl_.var_kinds[i]) {
        if (carrier_.witnesses(vars[i], kind).empty()) return;
      }
    }
    kval_ = 1;
    if (cl_.uses_index) {
      for (const auto& v : vars) kval_ = std::max(kval_, carrier_.index(v));
    }
    chosen_.assign(cl_.slots.size(), zero);
    if (!probe_ && !hypotheses_ready_at(-1)) return;
    dfs(0);
  }

 private:
  V eval(const Term& t) const {
    switch (t.op) {
      case Term::Op::Var: return (*vars_)[static_cast<std::size_t>(cl_.var_of.at(&t))];
      case Term::Op::Zero: return *zero_;
      case Term::Op::One: return *one_;
      case Term::Op::Add: return alg_.add(eval(*t.lhs), eval(*t.rhs));
      case Term::Op::Sub: return alg_.sub(eval(*t.lhs), eval(*t.rhs));
      case Term::Op::Mul: return alg_.mul(eval(*t.lhs), eval(*t.rhs));
      case Term::Op::Star: return alg_.star(eval(*t.lhs));
      case Term::Op::Pow: return alg_.pow(eval(*t.lhs), t.exponent);
      case Term::Op::PowIndex: return alg_.pow(eval(*t.lhs), kval_);
      case Term::Op::Inverse: return chosen_[static_cast<std::size_t>(cl_.slot_of.at(&t))];
    }
    return *zero_;
  }

  bool holds(const Formula& f) const {
    switch (f.type) {
      case Formula::Type::Equation: return alg_.equal(eval(*f.lhs), eval(*f.rhs));
      case Formula::Type::Membership: return carrier_.member(eval(*f.lhs), f.kind, eval(*f.rhs));
      case Formula::Type::Inclusion: return carrier_.included(f.set, eval(*f.lhs), eval(*f.rhs));
      case Formula::Type::SetEqual: {
        const V l = eval(*f.lhs);
        const V r = eval(*f.rhs);
        return carrier_.included(f.set, l, r) && carrier_.included(f.set, r, l);
      }
      case Formula::Type::Nilpotent: return carrier_.nilpotent(eval(*f.lhs));
      case Formula::Type::Hirano: return carrier_.hirano(eval(*f.lhs));
      case Formula::Type::Has: return !carrier_.witnesses(eval(*f.lhs), f.kind).empty();
    }
    return false;
  }

  bool hypotheses_ready_at(int slot) const {
    for (std::size_t h = 0; h < cl_.hyp_ready.size(); ++h) {
      if (cl_.hyp_ready[h] == slot && !holds(cl_.law->hypotheses[h])) return false;
    }
    return true;
  }

  void record(std::size_t assigned, std::string note) {
    ++out_->fails;
    if (out_->records.size() >= limit_) return;
    BindingRecord r;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      r.values.emplace_back(cl_.law->variables[i], carrier_.describe((*vars_)[i]));
    }
    for (std::size_t s = 0; s < assigned; ++s) r.witnesses.emplace_back(cl_.slots[s].key, carrier_.describe(chosen_[s]));
    r.note = std::move(note);
    out_->records.push_back(std::move(r));
  }

  void dfs(std::size_t i) {
    if (i == cl_.slots.size()) {
      finish();
      return;
    }
    const Slot& slot = cl_.slots[i];
    const V operand = eval(*slot.operand);
    const auto ws = carrier_.witnesses(operand, slot.kind);
    if (ws.empty()) {
      // A hypothesis mentioning the inverse presupposes it; a conclusion
      // asserts it.
      if (!probe_ && !slot.hypothesis) {
        ++out_->checked;
        record(i, "no " + std::string(kind_short_name(slot.kind)) + " inverse of " + print_term(*slot.operand));
      }
      return;
    }
    for (const auto& w : ws) {
      chosen_[i] = w;
      if (!probe_ && !hypotheses_ready_at(static_cast<int>(i))) continue;
      dfs(i + 1);
    }
  }

  void finish() {
    ++out_->checked;
    const bool conclusion = holds(cl_.law->conclusion);
    if (!probe_) {
      if (!conclusion) record(cl_.slots.size(), {});
      return;
    }
    if (!conclusion) return;
    for (std::size_t h = 0; h < cl_.law->hypotheses.size(); ++h) {
      if (!holds(cl_.law->hypotheses[h])) {
        record(cl_.slots.size(), "hypothesis " + std::to_string(h + 1) + " fails");
        return;
      }
    }
  }

  const C& carrier_;
  const typename std::remove_cvref_t<decltype(algebra_of(std::declval<const C&>()))>& alg_;
  const Compiled& cl_;
  bool probe_;
  std::size_t limit_;
  const std::vector<V>* vars_ = nullptr;
  const V* zero_ = nullptr;
  const V* one_ = nullptr;
  Partial* out_ = nullptr;
  unsigned kval_ = 1;
  std::vector<V> chosen_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

VerificationReport finalize(const Compiled& cl, const std::string& carrier, std::string mode, Partial&& p,
                            bool proper, bool probe) {
  VerificationReport r;
  r.law = cl.text;
  r.carrier = carrier;
  r.mode = std::move(mode);
  r.bindings_total = p.total;
  r.bindings_checked = p.checked;
  r.counterexample_count = p.fails;
  r.counterexamples = std::move(p.records);
  r.warnings = cl.law->warnings;
  if (p.checked == 0) {
    r.status = ReportStatus::Vacuous;
  } else if (probe) {
    r.status = p.fails > 0 ? ReportStatus::NotNecessary : ReportStatus::NoWitness;
  } else {
    r.status = p.fails > 0 ? ReportStatus::Fail : ReportStatus::Pass;
    if (p.fails > 0 && !proper) r.flags.push_back("possible-properness-gap");
  }
  return r;
}

void prefetch(const Compiled& cl, const RingOracle& o) {
  for (auto k : cl.kinds_used) o.table(k);
  o.index(0);
  if (cl.uses_hirano) o.hirano(0);
  RingCarrier c(o);
  for (auto s : cl.sets_used) c.included(s, 0, 0);
}

std::vector<std::vector<Code>> ring_domains(const Compiled& cl, const RingOracle& o) {
  std::vector<std::vector<Code>> out(cl.law->variables.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    for (std::size_t x = 0; x < o.ring().size(); ++x) {
      const Code c = static_cast<Code>(x);
      bool ok = true;
      for (auto k : cl.var_kinds[v]) ok = ok && !o.witnesses(k, c).empty();
      if (ok) out[v].push_back(c);
    }
  }
  return out;
}

Partial ring_exhaustive(const Compiled& cl, const RingOracle& o, bool probe, const EvalOptions& opt) {
  RingCarrier carrier(o);
  const Code zero = o.ring().zero();
  const Code one = o.ring().one();
  const auto domains = ring_domains(cl, o);
  const std::size_t nv = domains.size();
  Partial result;
  if (nv == 0) {
    Runner<RingCarrier> runner(carrier, cl, probe, opt.counterexample_limit);
    runner.run({}, zero, one, result);
    return result;
  }
  for (const auto& d : domains) {
    if (d.empty()) return result;
  }
  const long first = static_cast<long>(domains[0].size());
  std::vector<Partial> parts(domains[0].size());
  auto body = [&](long i) {
    Runner<RingCarrier> runner(carrier, cl, probe, opt.counterexample_limit);
    std::vector<Code> vars(nv);
    std::vector<std::size_t> pos(nv, 0);
    vars[0] = domains[0][static_cast<std::size_t>(i)];
    for (;;) {
      for (std::size_t v = 1; v < nv; ++v) vars[v] = domains[v][pos[v]];
      runner.run(vars, zero, one, parts[static_cast<std::size_t>(i)]);
      bool done = true;
      for (std::size_t v = nv; v > 1;) {
        --v;
        if (++pos[v] < domains[v].size()) {
          done = false;
          break;
        }
        pos[v] = 0;
      }
      if (done) return;
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < first; ++i) body(i);
  } else {
    for (long i = 0; i < first; ++i) body(i);
  }
  for (auto& p : parts) absorb(result, std::move(p), opt.counterexample_limit);
  return result;
}

/// Sampled driver shared by both carriers. Attempts are generated from
/// per-attempt seeds, evaluated in parallel chunks and consumed in order, so
/// the report does not depend on the thread count.
template <class C, class Sample>
Partial sampled(const Compiled& cl, const C& carrier, const EvalOptions& opt, bool& budget_exceeded, Sample sample) {
  using V = typename C::Value;
  const std::size_t cap = opt.max_attempts != 0 ? opt.max_attempts : 100 * opt.samples;
  const std::size_t chunk = 32;
  Partial result;
  std::size_t satisfied = 0;
  std::size_t attempt = 0;
  while (satisfied < opt.samples && attempt < cap) {
    const std::size_t m = std::min(chunk, cap - attempt);
    std::vector<Partial> parts(m);
    auto body = [&](long j) {
      std::vector<V> vars;
      V zero;
      V one;
      sample(mix(opt.seed, attempt + static_cast<std::size_t>(j)), vars, zero, one);
      Runner<C> runner(carrier, cl, false, opt.counterexample_limit);
      runner.run(vars, zero, one, parts[static_cast<std::size_t>(j)]);
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long j = 0; j < static_cast<long>(m); ++j) body(j);
    } else {
      for (long j = 0; j < static_cast<long>(m); ++j) body(j);
    }
    for (auto& p : parts) {
      if (satisfied >= opt.samples) break;
      if (p.checked > 0) ++satisfied;
      absorb(result, std::move(p), opt.counterexample_limit);
    }
    attempt += m;
  }
  budget_exceeded = satisfied < opt.samples;
  return result;
}

}  // namespace

VerificationReport evaluate_law(const Law& law, const RingOracle& ring, const EvalOptions& options) {
  const Compiled cl = compile(law);
  prefetch(cl, ring);
  if (options.mode == EvalMode::Exhaustive) {
    return finalize(cl, ring.ring().label(), "exhaustive", ring_exhaustive(cl, ring, false, options), ring.proper(),
                    false);
  }
  const auto domains = ring_domains(cl, ring);
  RingCarrier carrier(ring);
  bool exceeded = false;
  Partial p;
  const bool empty = std::any_of(domains.begin(), domains.end(), [](const auto& d) { return d.empty(); });
  if (!empty) {
    p = sampled(cl, carrier, options, exceeded, [&](std::uint64_t seed, std::vector<Code>& vars, Code& zero, Code& one) {
      std::mt19937_64 rng(seed);
      vars.clear();
      for (const auto& d : domains) vars.push_back(d[rng() % d.size()]);
      zero = ring.ring().zero();
      one = ring.ring().one();
    });
  }
  auto r = finalize(cl, ring.ring().label(), "sampled", std::move(p), ring.proper(), false);
  r.budget_exceeded = exceeded || empty;
  return r;
}

VerificationReport evaluate_law(const Law& law, const MatrixCarrier& matrices, const EvalOptions& options) {
  if (options.mode != EvalMode::Sampled) {
    throw Error(ErrorCode::InapplicableCarrier, "exhaustive evaluation needs a finite ring");
  }
  const Compiled cl = compile(law);
  bool exceeded = false;
  const std::size_t nv = law.variables.size();
  Partial p = sampled(cl, matrices, options, exceeded,
                      [&](std::uint64_t seed, std::vector<Matrix>& vars, Matrix& zero, Matrix& one) {
                        const std::size_t n = matrices.sample(seed, nv, vars);
                        zero = Matrix::zero(n);
                        one = Matrix::identity(n);
                      });
  auto r = finalize(cl, matrices.label(), "sampled", std::move(p), true, false);
  r.budget_exceeded = exceeded;
  return r;
}

VerificationReport necessity_probe(const Law& law, const RingOracle& ring, const EvalOptions& options) {
  if (law.hypotheses.empty()) throw Error(ErrorCode::InvalidArgument, "necessity probe needs at least one hypothesis");
  const Compiled cl = compile(law);
  prefetch(cl, ring);
  return finalize(cl, ring.ring().label(), "probe", ring_exhaustive(cl, ring, true, options), ring.proper(), true);
}

}  // namespace ginv
