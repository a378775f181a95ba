#include "mgcli/runner.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mg/cs_theory.hpp"
#include "mg/determinantal.hpp"
#include "mg/errors.hpp"
#include "mg/gin.hpp"
#include "mg/groebner.hpp"

namespace mgcli {
namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  std::string verdict = "computed";
  bool asserted = false;
  bool passed = true;
  Json evidence = Json::object();
  Json seeds = Json::array();
  Json orders = Json::array();
};

Json poly_list(const std::vector<mg::Polynomial>& polys, const mg::BlockRing& ring) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string(ring));
  return out;
}

Json monomial_list(const mg::MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& m : ideal.generators()) out.push_back(ideal.ring().monomial_to_string(m));
  return out;
}

Json seed_list(const std::vector<std::uint64_t>& seeds) {
  Json out = Json::array();
  for (auto s : seeds) out.push_back(s);
  return out;
}

class Session {
 public:
  Session(const SessionScript& script, const RunOptions& options)
      : script_(script), options_(options), ring_(script.block_ring()),
        order_(parse_order_flag(options.order, ring_)) {}

  int execute(std::ostream& out, std::ostream& err) {
    int status = kPass;
    for (const auto& st : script_.statements) {
      if (const auto* cmd = std::get_if<Command>(&st)) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        bool resource = false;
        try {
          outcome = run_command(*cmd);
        } catch (const mg::ResourceLimitError& e) {
          outcome.verdict = "resource-abort";
          outcome.evidence["error"] = e.what();
          outcome.passed = false;
          resource = true;
        } catch (const mg::Error& e) {
          outcome.verdict = "error";
          outcome.evidence["error"] = e.what();
          const auto expect = cmd->options.find("expect");
          outcome.asserted = expect != cmd->options.end();
          outcome.passed = outcome.asserted && expect->second == "error";
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(*cmd, outcome, seconds, out);
        if (resource) {
          err << "resource limit reached in '" << cmd->name << "': " << outcome.evidence["error"].get<std::string>()
              << "\n";
          return kResourceAbort;
        }
        if (!outcome.passed) {
          status = kCheckFailure;
          if (outcome.verdict == "error") err << cmd->where.line << ":" << cmd->where.column << ": " << cmd->name
                                              << ": " << outcome.evidence["error"].get<std::string>() << "\n";
        }
      } else {
        try {
          declare(st);
        } catch (const mg::ResourceLimitError& e) {
          err << "resource limit reached while evaluating a declaration: " << e.what() << "\n";
          return kResourceAbort;
        } catch (const mg::Error& e) {
          err << "declaration failed: " << e.what() << "\n";
          return kCheckFailure;
        }
      }
    }
    return status;
  }

 private:
  void declare(const Statement& st) {
    if (const auto* d = std::get_if<IdealDecl>(&st)) {
      if (d->items.size() == 1) {
        ideals_.insert_or_assign(d->name, ideal_of(d->items[0]));
        return;
      }
      std::vector<mg::Polynomial> gens;
      for (const auto& item : d->items) {
        const auto part = generators_of(item);
        gens.insert(gens.end(), part.begin(), part.end());
      }
      ideals_.insert_or_assign(d->name, mg::Ideal(ring_, std::move(gens)));
    } else if (const auto* p = std::get_if<PolyDecl>(&st)) {
      polys_.insert_or_assign(p->name, p->poly);
    } else if (const auto* m = std::get_if<MatrixDecl>(&st)) {
      matrices_.insert_or_assign(m->name, build(*m));
    }
  }

  mg::GradedMatrix build(const MatrixDecl& m) const {
    if (!m.seed) return mg::GradedMatrix(ring_, m.rows, m.cols, m.entries, m.mode);
    const auto p = ring_.characteristic();
    if (m.mode == mg::Grading::Column) return mg::build_column_graded(m.rows, ring_.block_sizes(), *m.seed, p);
    return mg::build_row_graded(m.cols, ring_.block_sizes(), *m.seed, p);
  }

  std::vector<mg::Polynomial> generators_of(const IdealItem& item) const {
    switch (item.kind) {
      case IdealItem::Kind::Poly: return {item.poly};
      case IdealItem::Kind::Ref: return ideals_.at(item.name).generators();
      case IdealItem::Kind::Minors:
        return mg::minors(matrices_.at(item.name), static_cast<std::size_t>(item.t));
      case IdealItem::Kind::Colon:
        return mg::colon(ideal_of(item.operands[0]), item.operands[1].poly).generators();
      case IdealItem::Kind::Intersect:
        return mg::intersect(ideal_of(item.operands[0]), ideal_of(item.operands[1])).generators();
    }
    return {};
  }

  mg::Ideal ideal_of(const IdealItem& item) const {
    if (item.kind == IdealItem::Kind::Ref) return ideals_.at(item.name);
    return mg::Ideal(ring_, generators_of(item));
  }

  std::uint64_t seed(const Command& cmd) const {
    const auto it = cmd.options.find("seed");
    return it == cmd.options.end() ? options_.seed : std::stoull(it->second);
  }
  int trials(const Command& cmd) const {
    const auto it = cmd.options.find("trials");
    return it == cmd.options.end() ? options_.trials : std::stoi(it->second);
  }
  std::size_t count(const Command& cmd, const std::string& key, std::size_t fallback) const {
    const auto it = cmd.options.find(key);
    return it == cmd.options.end() ? fallback : std::stoul(it->second);
  }
  mg::TermOrder order(const Command& cmd) const {
    const auto it = cmd.options.find("order");
    if (it == cmd.options.end()) return order_;
    return it->second == "lex" ? mg::TermOrder::lex(ring_) : mg::TermOrder::degrevlex(ring_);
  }
  mg::CsOptions cs_options(const Command& cmd) const { return {trials(cmd), seed(cmd), std::nullopt}; }

  mg::MonomialIdeal monomial(const mg::Ideal& ideal) const {
    if (!ideal.has_monomial_generators()) throw mg::PreconditionError("command needs monomial generators");
    std::vector<mg::Monomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.terms().front().monomial);
    return mg::MonomialIdeal(ring_, std::move(gens));
  }

  /// Verdict commands assert only with expect=; pass/fail commands always do.
  static void settle(Outcome& o, const Command& cmd, bool always) {
    const auto it = cmd.options.find("expect");
    if (it != cmd.options.end()) {
      o.asserted = true;
      const bool want_yes = it->second == "yes";
      const bool got_yes = o.verdict == "yes" || o.verdict == "pass";
      const bool got_no = o.verdict == "no" || o.verdict == "fail";
      o.passed = it->second != "error" && (want_yes ? got_yes : got_no);
    } else if (always) {
      o.asserted = true;
      o.passed = o.verdict == "pass";
    }
  }

  void membership(Outcome& o, const mg::MembershipReport& r) const {
    o.verdict = mg::to_string(r.verdict);
    o.evidence["criterion"] = r.criterion;
    o.evidence["detail"] = r.detail;
    if (r.gin) o.evidence["gin"] = monomial_list(*r.gin);
    o.seeds = seed_list(r.seeds);
    for (const auto& s : r.orders) o.orders.push_back(s);
  }

  Outcome run_command(const Command& cmd) {
    Outcome o;
    const auto& name = cmd.name;
    const auto arg_ideal = [&](std::size_t k) { return ideal_of(cmd.args[k].item); };
    if (name == "gb") {
      const auto ideal = arg_ideal(0);
      const auto o1 = order(cmd);
      const auto basis = ideal.groebner_basis(o1);
      o.evidence["basis"] = poly_list(basis->elements(), ring_);
      o.evidence["leading_terms"] = monomial_list(mg::MonomialIdeal(ring_, basis->leading_monomials()));
      o.orders.push_back(o1.canonical());
    } else if (name == "gin") {
      const auto run = mg::gin(arg_ideal(0), order(cmd), {trials(cmd), seed(cmd)});
      o.verdict = run.agreement ? "computed" : "inconclusive";
      o.evidence["gin"] = monomial_list(run.result);
      o.evidence["agreement"] = run.agreement;
      o.evidence["borel_fixed"] = run.borel_fixed;
      if (!run.agreement) {
        Json candidates = Json::array();
        for (const auto& c : run.candidates) candidates.push_back(monomial_list(c));
        o.evidence["candidates"] = candidates;
      }
      o.seeds = seed_list(run.seeds);
      o.orders.push_back(run.order);
    } else if (name == "hilbert") {
      const auto o1 = order(cmd);
      const auto k = mg::hilbert_series(arg_ideal(0), o1);
      o.evidence["numerator"] = k.to_string();
      std::ostringstream den;
      for (std::size_t i = 0; i < ring_.num_blocks(); ++i) {
        den << (i ? "*" : "") << "(1 - y" << i + 1 << ")^" << ring_.block_size(i);
      }
      o.evidence["denominator"] = den.str();
      o.orders.push_back(o1.canonical());
    } else if (name == "radical") {
      const auto ideal = arg_ideal(0);
      if (ideal.has_monomial_generators()) {
        const bool yes = mg::is_radical_monomial(monomial(ideal));
        o.verdict = yes ? "yes" : "no";
        o.evidence["criterion"] = yes ? "minimal monomial generators are squarefree"
                                      : "a minimal monomial generator is not squarefree";
      } else {
        const auto o1 = order(cmd);
        const auto in = mg::initial_ideal(ideal, o1);
        o.verdict = in.is_squarefree() ? "yes" : "inconclusive";
        o.evidence["criterion"] = in.is_squarefree() ? "squarefree initial ideal"
                                                     : "initial ideal not squarefree; no decision";
        o.evidence["initial_ideal"] = monomial_list(in);
        o.orders.push_back(o1.canonical());
      }
      settle(o, cmd, false);
    } else if (name == "borel") {
      const auto m = monomial(arg_ideal(0));
      const bool fixed = mg::is_borel_fixed(m);
      o.verdict = fixed ? "yes" : "no";
      o.evidence["borel_fixed"] = fixed;
      o.evidence["strongly_stable"] = mg::is_strongly_stable(m);
      o.evidence["characteristic"] = ring_.characteristic();
      settle(o, cmd, false);
    } else if (name == "dual") {
      o.evidence["dual"] = monomial_list(mg::alexander_dual(monomial(arg_ideal(0))));
    } else if (name == "polarize") {
      o.evidence["polarization"] = monomial_list(mg::polarize(monomial(arg_ideal(0))));
    } else if (name == "minors") {
      const auto list = mg::minors(matrices_.at(cmd.args[0].name), static_cast<std::size_t>(cmd.args[1].value));
      o.evidence["minors"] = poly_list(list, ring_);
      o.evidence["count"] = list.size();
    } else if (name == "cs") {
      membership(o, mg::is_cs(arg_ideal(0), cs_options(cmd)));
      settle(o, cmd, false);
    } else if (name == "csstar") {
      membership(o, mg::is_csstar(arg_ideal(0), cs_options(cmd)));
      settle(o, cmd, false);
    } else if (name == "ugb") {
      const auto ideal = arg_ideal(0);
      const auto r = mg::ugb_check(ideal.generators(), ideal, count(cmd, "orders", 50), seed(cmd));
      o.verdict = r.pass() ? "pass" : "fail";
      o.evidence["orders_tested"] = r.orders_tested;
      o.evidence["failures"] = r.failures.size();
      Json examples = Json::array();
      for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k) {
        examples.push_back({{"order", r.failures[k].order}, {"element", r.failures[k].element.to_string(ring_)}});
      }
      o.evidence["failure_examples"] = examples;
      Json profile = Json::object();
      for (const auto& [d, c] : r.degree_profile) profile[d.to_string()] = c;
      o.evidence["degree_profile"] = profile;
      o.evidence["note"] = r.note;
      o.seeds.push_back(seed(cmd));
      for (const auto& s : r.orders) o.orders.push_back(s);
      settle(o, cmd, true);
    } else if (name == "closure") {
      const auto t = mg::closure_suite(arg_ideal(0), cmd.args[1].item.poly, cs_options(cmd));
      o.verdict = t.passed() ? "pass" : "fail";
      o.evidence["checks"] = transcript(t);
      o.seeds.push_back(seed(cmd));
      settle(o, cmd, true);
    } else if (name == "bounds") {
      const auto ideal = arg_ideal(0);
      const auto bound = parse_bound(cmd.options.at("bound"));
      const auto it = cmd.options.find("mode");
      const auto mode = it != cmd.options.end() && it->second == "exactly" ? mg::BoundMode::Exactly
                                                                            : mg::BoundMode::AtMost;
      const auto sampled = mg::sample_orders(ring_, count(cmd, "orders", 20), seed(cmd), false);
      const auto r = mg::degree_bound_check(ideal, bound, sampled, mode);
      o.verdict = r.passed ? "yes" : "no";
      o.evidence["bound"] = bound.to_string();
      o.evidence["mode"] = mode == mg::BoundMode::Exactly ? "exactly" : "atmost";
      o.evidence["orders_tested"] = r.orders_tested;
      Json v = Json::array();
      for (std::size_t k = 0; k < r.violations.size() && k < 10; ++k) v.push_back(r.violations[k]);
      o.evidence["violations"] = v;
      o.seeds.push_back(seed(cmd));
      for (const auto& s : sampled) o.orders.push_back(s.canonical());
      settle(o, cmd, false);
    } else if (name == "main-theorem") {
      const auto& a = matrices_.at(cmd.args[0].name);
      mg::MainTheoremOptions mt{count(cmd, "orders", 50), seed(cmd), trials(cmd), true};
      const auto r = mg::verify_main_theorem(a, mt);
      o.verdict = r.passed() ? "pass" : "fail";
      o.evidence["checks"] = transcript(r.transcript);
      o.seeds = seed_list(r.gin_seeds);
      for (const auto& s : r.orders) o.orders.push_back(s);
      settle(o, cmd, true);
    } else if (name == "colon") {
      const auto result = mg::colon(arg_ideal(0), cmd.args[1].item.poly);
      o.evidence["generators"] = poly_list(mg::minimal_generators(result), ring_);
    } else if (name == "intersect") {
      const auto result = mg::intersect(arg_ideal(0), arg_ideal(1));
      o.evidence["generators"] = poly_list(mg::minimal_generators(result), ring_);
    } else if (name == "dual-theorem") {
      const auto r = mg::verify_dual_theorem(monomial(arg_ideal(0)), cs_options(cmd));
      o.verdict = r.inconclusive ? "inconclusive" : r.holds ? "pass" : "fail";
      Json lines = Json::array();
      for (const auto& line : r.transcript) lines.push_back(line);
      o.evidence["transcript"] = lines;
      o.seeds.push_back(seed(cmd));
      settle(o, cmd, true);
    } else {
      throw mg::PreconditionError("unknown command " + name);
    }
    return o;
  }

  mg::Multidegree parse_bound(const std::string& text) const {
    std::vector<int> entries;
    std::stringstream in(text.substr(1, text.size() - 2));
    std::string piece;
    while (std::getline(in, piece, ',')) entries.push_back(std::stoi(piece));
    return mg::Multidegree(std::move(entries));
  }

  static Json transcript(const mg::Transcript& t) {
    Json lines = Json::array();
    for (const auto& line : t.lines) {
      lines.push_back({{"check", line.name}, {"passed", line.passed}, {"detail", line.detail}});
    }
    return lines;
  }

  void report(const Command& cmd, const Outcome& o, double seconds, std::ostream& out) const {
    SessionScript one{script_.ring, {cmd}};
    auto line = serialize(one);
    line = line.substr(line.find('\n') + 1);
    if (!line.empty() && line.back() == '\n') line.pop_back();
    Json record;
    record["schema"] = 1;
    record["command"] = cmd.name;
    record["inputs"] = {{"statement", line}, {"ring", ring_.to_string()}};
    record["verdict"] = o.verdict;
    record["asserted"] = o.asserted;
    record["passed"] = o.passed;
    record["evidence"] = o.evidence;
    record["seeds"] = o.seeds;
    record["orders"] = o.orders;
    if (!options_.omit_timings) record["timings"] = {{"seconds", seconds}};
    if (options_.json) {
      out << record.dump() << "\n";
    } else {
      out << "== " << line << "\n";
      out << "verdict: " << o.verdict;
      if (o.asserted) out << (o.passed ? " [check passed]" : " [CHECK FAILED]");
      out << "\n";
      for (const auto& [key, value] : o.evidence.items()) {
        if (value.is_array()) {
          out << key << ":\n";
          for (const auto& v : value) out << "  " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else {
          out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
      }
      if (!o.seeds.empty()) out << "seeds: " << o.seeds.dump() << "\n";
      if (!o.orders.empty()) {
        out << "orders: " << o.orders.size();
        if (o.orders.size() <= 3) out << " " << o.orders.dump();
        out << "\n";
      }
    }
    out.flush();
  }

  const SessionScript& script_;
  RunOptions options_;
  mg::BlockRing ring_;
  mg::TermOrder order_;
  std::map<std::string, mg::Ideal> ideals_;
  std::map<std::string, mg::Polynomial> polys_;
  std::map<std::string, mg::GradedMatrix> matrices_;
};

}  // namespace

mg::TermOrder parse_order_flag(const std::string& text, const mg::BlockRing& ring) {
  if (text == "degrevlex") return mg::TermOrder::degrevlex(ring);
  if (text == "lex") return mg::TermOrder::lex(ring);
  const std::string prefix = "weight:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("order must be degrevlex, lex or weight:w1,w2,...");
  std::vector<std::int64_t> weights;
  std::stringstream in(text.substr(prefix.size()));
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    long long w = 0;
    try {
      w = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight '" + piece + "'");
    }
    if (used != piece.size() || w < 0) throw std::invalid_argument("bad weight '" + piece + "'");
    weights.push_back(w);
  }
  if (weights.size() != ring.num_graded_variables()) {
    throw std::invalid_argument("weight order needs " + std::to_string(ring.num_graded_variables()) + " weights");
  }
  return mg::TermOrder::weight(ring, std::move(weights), mg::TermOrder::Kind::DegRevLex);
}

int run(const SessionScript& script, const RunOptions& options, std::ostream& out, std::ostream& err) {
  if (options.max_basis) {
    auto limits = mg::GroebnerLimits::defaults();
    limits.max_basis = *options.max_basis;
    mg::GroebnerLimits::set_defaults(limits);
  }
  return Session(script, options).execute(out, err);
}

}  // namespace mgcli
