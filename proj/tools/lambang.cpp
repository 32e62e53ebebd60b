#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambang/corpus.hpp"
#include "lambang/ctx_oracle.hpp"
#include "lambang/eval.hpp"
#include "lambang/parser.hpp"
#include "lambang/prelude.hpp"
#include "lambang/trace.hpp"
#include "lambang/typecheck.hpp"

using namespace lambang;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDistinguished = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Program load_file(const std::string& path, Monad m, const std::string& alphabet) {
  return load_program(parse_defs(read_file(path), m, alphabet), m, alphabet);
}

const Program::Item& pick_item(const Program& prog, const std::string& name,
                               const std::string& path) {
  if (name.empty()) return prog.last();
  const Program::Item* it = prog.find(name);
  if (!it) throw std::runtime_error("no definition '" + name + "' in " + path);
  return *it;
}

// The program under test as a computation (a value v is run as `return v`).
TermPtr as_computation(const Program::Item& item) {
  return item.is_value ? ret(item.term) : item.term;
}

struct Common {
  std::string monad = "dist";
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  bool json = false;

  Monad parse_monad() const {
    auto m = monad_from_name(monad);
    if (!m) throw std::runtime_error("unknown monad '" + monad + "'");
    return *m;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--monad", c.monad, "maybe | dist | output | input");
  cmd->add_option("--alphabet", c.alphabet, "output alphabet (default a..z)");
  cmd->add_flag("--json", c.json, "machine-readable JSON output");
}

int run(int argc, char** argv) {
  CLI::App app{"lambang: a linear call-by-value calculus with algebraic effects"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "parse and typecheck a .lam file");
  Common check_c;
  std::string check_file;
  check->add_option("file", check_file)->required();
  add_common(check, check_c);

  auto* ev = app.add_subcommand("eval", "evaluate a definition under a fuel budget");
  Common ev_c;
  std::string ev_file, ev_def;
  int ev_fuel = 50;
  ev->add_option("file", ev_file)->required();
  ev->add_option("--fuel", ev_fuel, "fuel budget (default 50)");
  ev->add_option("--def", ev_def, "definition to evaluate (default: last)");
  add_common(ev, ev_c);

  auto* trs = app.add_subcommand("traces", "enumerate the trace set of a definition's type");
  Common trs_c;
  std::string trs_file, trs_def;
  int trs_depth = 3, trs_ctx = 3;
  trs->add_option("file", trs_file)->required();
  trs->add_option("--depth", trs_depth, "maximum trace length (default 3)");
  trs->add_option("--ctx-size", trs_ctx, "application-context size bound (default 3)");
  trs->add_option("--def", trs_def, "definition (default: last)");
  add_common(trs, trs_c);

  auto* te = app.add_subcommand("trace-equiv", "bounded trace equivalence of two programs");
  Common te_c;
  std::string te_a, te_b, te_defa, te_defb;
  TraceBounds te_bounds;
  te->add_option("fileA", te_a)->required();
  te->add_option("fileB", te_b)->required();
  te->add_option("--depth", te_bounds.depth, "maximum trace length (default 4)");
  te->add_option("--ctx-size", te_bounds.ctx_size, "application-context size bound (default 3)");
  te->add_option("--fuel", te_bounds.fuel, "fuel for eval actions (default 30)");
  te->add_option("--defA", te_defa, "definition in fileA (default: last)");
  te->add_option("--defB", te_defb, "definition in fileB (default: last)");
  add_common(te, te_c);

  auto* ce = app.add_subcommand("ctx-equiv", "bounded contextual equivalence of two programs");
  Common ce_c;
  std::string ce_a, ce_b, ce_defa, ce_defb;
  CtxBounds ce_bounds;
  ce->add_option("fileA", ce_a)->required();
  ce->add_option("fileB", ce_b)->required();
  ce->add_option("--ctx-size", ce_bounds.ctx_size, "context size bound (default 6)");
  ce->add_option("--fuel", ce_bounds.fuel, "evaluation fuel (default 30)");
  ce->add_option("--defA", ce_defa, "definition in fileA (default: last)");
  ce->add_option("--defB", ce_defb, "definition in fileB (default: last)");
  add_common(ce, ce_c);

  auto* cc = app.add_subcommand(
      "cross-check", "trace equivalence vs the contextual oracle on a corpus");
  Common cc_c;
  std::string cc_corpus;
  std::uint64_t cc_seed = 1;
  bool cc_seed_set = false;
  int cc_count = 200, cc_term_size = 6;
  TraceBounds cc_tb{5, 3, 40};
  int cc_oracle_ctx = 6;
  cc->add_option("--corpus", cc_corpus,
                 ".lam file; consecutive same-type definitions form pairs");
  auto* seed_opt = cc->add_option("--seed", cc_seed, "random corpus seed (or env LAMBANG_SEED)");
  cc->add_option("--count", cc_count, "number of random pairs (default 200)");
  cc->add_option("--term-size", cc_term_size, "random term size bound (default 6)");
  cc->add_option("--depth", cc_tb.depth, "trace depth (default 5)");
  cc->add_option("--ctx-size", cc_tb.ctx_size, "trace action context size (default 3)");
  cc->add_option("--oracle-ctx-size", cc_oracle_ctx, "oracle context size (default 6)");
  cc->add_option("--fuel", cc_tb.fuel, "shared fuel (default 40)");
  add_common(cc, cc_c);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    Monad m = check_c.parse_monad();
    Program prog = load_file(check_file, m, check_c.alphabet);
    if (check_c.json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& it : prog.items)
        j.push_back({{"name", it.name},
                     {"type", type_to_string(it.type)},
                     {"class", it.is_value ? "value" : "computation"}});
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& it : prog.items)
        std::cout << "ok: " << it.name << " : " << type_to_string(it.type) << "\n";
    }
    return kExitOk;
  }

  if (ev->parsed()) {
    Monad m = ev_c.parse_monad();
    Program prog = load_file(ev_file, m, ev_c.alphabet);
    const auto& item = pick_item(prog, ev_def, ev_file);
    EvalResult res = eval(as_computation(item), ev_fuel, m);
    if (ev_c.json) {
      nlohmann::json j = {{"def", item.name},
                          {"fuel", res.fuel_used},
                          {"stabilized", res.stabilized},
                          {"value", mv::to_json(res.value)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << item.name << " @ fuel " << ev_fuel << ": " << mv::to_string(res.value)
                << (res.stabilized ? "  (stabilized)" : "") << "\n";
    }
    return kExitOk;
  }

  if (trs->parsed()) {
    Monad m = trs_c.parse_monad();
    Program prog = load_file(trs_file, m, trs_c.alphabet);
    const auto& item = pick_item(prog, trs_def, trs_file);
    ConfigType alpha = initial_config(as_computation(item), item.type).type;
    std::vector<Trace> traces = trace_set(alpha, trs_depth, trs_ctx, m);
    if (trs_c.json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& t : traces) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& a : t) row.push_back(a.label());
        j.push_back(std::move(row));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& t : traces) std::cout << trace_label(t) << "\n";
    }
    return kExitOk;
  }

  if (te->parsed()) {
    Monad m = te_c.parse_monad();
    Program pa = load_file(te_a, m, te_c.alphabet);
    Program pb = load_file(te_b, m, te_c.alphabet);
    const auto& ia = pick_item(pa, te_defa, te_a);
    const auto& ib = pick_item(pb, te_defb, te_b);
    TraceReport rep = trace_equiv(initial_config(as_computation(ia), ia.type),
                                  initial_config(as_computation(ib), ib.type),
                                  te_bounds, m);
    if (te_c.json) {
      std::cout << rep.to_json(m).dump(2) << "\n";
    } else {
      std::cout << rep.verdict() << "\n";
      if (rep.witness) {
        if (const auto* w = std::get_if<TraceWitness>(&*rep.witness)) {
          std::cout << "witness trace: " << trace_label(w->trace) << "\n"
                    << "lhs obs: " << mv::to_string(w->lhs_obs) << "\n"
                    << "rhs obs: " << mv::to_string(w->rhs_obs) << "\n";
        } else {
          const auto& tm = std::get<TypeMismatchWitness>(*rep.witness);
          std::cout << "configuration types differ: " << tm.lhs.to_string() << " vs "
                    << tm.rhs.to_string() << "\n";
        }
      }
    }
    return rep.distinguished ? kExitDistinguished : kExitOk;
  }

  if (ce->parsed()) {
    Monad m = ce_c.parse_monad();
    Program pa = load_file(ce_a, m, ce_c.alphabet);
    Program pb = load_file(ce_b, m, ce_c.alphabet);
    const auto& ia = pick_item(pa, ce_defa, ce_a);
    const auto& ib = pick_item(pb, ce_defb, ce_b);
    if (!type_eq(ia.type, ib.type))
      throw TypeError("programs have different types: " + type_to_string(ia.type) +
                      " vs " + type_to_string(ib.type));
    CtxReport rep =
        ctx_equiv(as_computation(ia), as_computation(ib), ia.type, ce_bounds, m);
    if (ce_c.json) {
      std::cout << rep.to_json().dump(2) << "\n";
    } else {
      std::cout << rep.verdict() << "\n";
      if (rep.witness) {
        std::cout << "witness context: " << term_to_string(rep.witness->context) << "\n"
                  << "lhs obs: " << mv::to_string(rep.witness->lhs_obs) << "\n"
                  << "rhs obs: " << mv::to_string(rep.witness->rhs_obs) << "\n";
      }
    }
    return rep.distinguished ? kExitDistinguished : kExitOk;
  }

  if (cc->parsed()) {
    Monad m = cc_c.parse_monad();
    if (seed_opt->count() == 0) {
      if (const char* env = std::getenv("LAMBANG_SEED"))
        cc_seed = std::strtoull(env, nullptr, 10);
    }
    (void)cc_seed_set;
    std::vector<CorpusPair> corpus;
    if (!cc_corpus.empty()) {
      // Pairs are definitions named <stem>_L and <stem>_R; other defs are
      // helpers.
      Program prog = load_file(cc_corpus, m, cc_c.alphabet);
      for (const auto& a : prog.items) {
        if (a.name.size() < 2 || a.name.substr(a.name.size() - 2) != "_L") continue;
        std::string stem = a.name.substr(0, a.name.size() - 2);
        const Program::Item* b = prog.find(stem + "_R");
        if (!b) throw TypeError("corpus definition '" + a.name + "' has no '" + stem +
                                "_R' partner");
        if (!type_eq(a.type, b->type))
          throw TypeError("corpus pair '" + stem + "' has mismatched types");
        corpus.push_back({a.name, b->name, as_computation(a), as_computation(*b), a.type});
      }
    } else {
      corpus = random_corpus(cc_seed, cc_count, cc_term_size, m);
    }
    CtxBounds cb{cc_oracle_ctx, cc_tb.fuel};
    CrossCheckReport rep = cross_check(corpus, cc_tb, cb, m);
    if (cc_c.json) {
      std::cout << rep.to_json().dump(2) << "\n";
    } else {
      std::cout << "pairs: " << rep.entries.size()
                << "  both-distinguished: " << rep.both_distinguished
                << "  trace-only: " << rep.trace_only << "  ctx-only: " << rep.ctx_only
                << "  soundness violations: " << rep.soundness_violations << "\n";
      for (const auto& e : rep.entries)
        if (e.soundness_violation)
          std::cout << "VIOLATION: " << e.lhs_name << " vs " << e.rhs_name << " : "
                    << e.type << "\n";
    }
    return rep.soundness_violations == 0 ? kExitOk : kExitDistinguished;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
