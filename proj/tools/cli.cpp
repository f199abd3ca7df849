#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rtau/construct.hpp"
#include "rtau/tau.hpp"
#include "rtau/text.hpp"

namespace rtau::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string tuple_text(std::span<const Integer> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].get_str();
  return s + ")";
}

std::string valuation_text(const ValuationResult& v) {
  switch (v.kind) {
    case ValuationResult::Kind::determined: return std::to_string(v.value);
    case ValuationResult::Kind::infinite: return "inf";
    case ValuationResult::Kind::need_more_precision: return "unsettled";
  }
  return "?";
}

// A state file, or `exact:<z>` for the state with every coordinate equal to z.
TauState load_tau(const std::string& source) {
  if (source.rfind("exact:", 0) == 0) return TauState::all_exact(parse_integer(source.substr(6)));
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(Errc::precondition, "cannot read " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize(buffer.str());
}

void emit_state(const TauState& tau, const std::string& path, bool machine, std::ostream& out) {
  const std::string text = serialize(tau);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::precondition, "cannot write " + path);
  file << text;
  file.close();
  if (machine) {
    Json j;
    j["written"] = path;
    j["stage"] = tau.stage;
    j["components"] = tau.components.size();
    j["ledger"] = tau.ledger.size();
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << path << ": stage " << tau.stage << ", " << tau.components.size() << " components, "
        << tau.ledger.size() << " ledger entries\n";
  }
}

void certify(const TauState& tau, const std::string& text, bool machine, std::ostream& out) {
  const RTauElem f = parse_poly(text);
  Answer member = membership(f, tau);
  Answer unit = is_unit_adeles(f, member.state);
  std::optional<Answer> prime;
  if (member.verdict.certainty.true_or_promised() && !f.num().is_zero() &&
      !(f.is_constant() && f.den() == 1 && abs(f.num().coeff(0)) == 1)) {
    prime = is_prime(f, unit.state);
  }
  const Verdict& main = prime ? prime->verdict : member.verdict;
  const std::string verdict = prime ? to_string(main.certainty) : "CertifiedFalse";
  const LedgerEntry* tracked = nullptr;
  std::size_t tracked_index = 0;
  IntPoly prim = f.num().is_zero() ? f.num() : content_primitive(f.num()).primitive;
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    if (tau.ledger[i].f == prim) {
      tracked = &tau.ledger[i];
      tracked_index = i;
    }
  }
  if (machine) {
    Json j;
    j["element"] = format(f);
    j["prime"] = verdict;
    j["membership"] = to_string(member.verdict.certainty);
    j["unit"] = to_string(unit.verdict.certainty);
    Json ev = Json::array();
    for (const PrimeEvidence& e : main.evidence) {
      ev.push_back({{"p", e.p.get_str()}, {"valuation", valuation_text(e.valuation)}, {"required", e.required}});
    }
    j["evidence"] = ev;
    if (tracked) {
      j["ledger_match"] = {{"index", tracked_index}, {"n", tracked->n.get_str()}, {"stage", tracked->stage}};
    } else {
      j["ledger_match"] = nullptr;
    }
    j["note"] = main.note;
    out << j.dump(2) << "\n";
    return;
  }
  out << "element: " << format(f) << "\n";
  out << "verdict: " << verdict << "\n";
  out << "membership: " << to_string(member.verdict.certainty) << "\n";
  out << "unit: " << to_string(unit.verdict.certainty) << "\n";
  for (const PrimeEvidence& e : main.evidence) {
    out << "  p = " << e.p << ": valuation " << valuation_text(e.valuation) << ", denominator needs " << e.required
        << "\n";
  }
  if (tracked) {
    out << "ledger match: #" << tracked_index << " (stage " << tracked->stage << ", n = " << tracked->n << ")\n";
  } else {
    out << "ledger match: none\n";
  }
  if (!main.note.empty()) out << "note: " << main.note << "\n";
}

void list_primes(const TauState& tau, bool progressions_only, bool machine, std::ostream& out) {
  Json entries = Json::array();
  std::optional<std::int64_t> group;
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    const LedgerEntry& e = tau.ledger[i];
    if (progressions_only && !e.progression) continue;
    const std::string g = format(e.normalized());
    if (machine) {
      Json j;
      j["index"] = i;
      j["stage"] = e.stage;
      j["prime"] = g;
      if (e.progression) {
        j["group"] = e.progression->group;
        j["offset"] = e.progression->offset.get_str();
      }
      entries.push_back(j);
      continue;
    }
    if (e.progression && group != e.progression->group) {
      group = e.progression->group;
      out << "progression " << tuple_text(e.progression->diffs) << " from stage " << e.stage << ", degree "
          << e.progression->degree << ":\n";
    } else if (!e.progression) {
      group.reset();
    }
    out << (e.progression ? "  " : "") << "#" << i << " [stage " << e.stage << "] " << g << "\n";
  }
  if (machine) out << Json{{"entries", entries}}.dump(2) << "\n";
}

void show(const TauState& tau, bool machine, std::ostream& out) {
  if (machine) {
    out << serialize(tau);
    return;
  }
  out << "builder: " << to_string(tau.kind) << "\n";
  out << "seed: " << tau.seed << "\n";
  out << "stage: " << tau.stage << "\n";
  out << "s: " << tau.s << "\n";
  if (tau.default_exact) out << "default component: exact " << *tau.default_exact << "\n";
  out << "components: " << tau.components.size() << "\n";
  for (const auto& [p, c] : tau.components) {
    if (c.is_exact()) {
      out << "  tau_" << p << " = " << c.as_exact().value << "\n";
    } else {
      out << "  tau_" << p << " = " << c.as_approx().residue << " mod " << p << "^" << c.as_approx().precision << "\n";
    }
  }
  out << "ledger: " << tau.ledger.size() << "\n";
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    out << "  #" << i << " " << format(tau.ledger[i].normalized()) << "\n";
  }
}

}  // namespace

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error:
    case Errc::not_increasing:
      return 2;
    case Errc::valuation_unresolvable:
    case Errc::quota_unmet:
    case Errc::exhausted_primes:
    case Errc::lefschetz_search_exhausted:
      return 4;
    case Errc::ledger_violation:
    case Errc::no_residue:
      return 5;
    default:
      return 3;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the rings R_tau of rational polynomials", "rtau"};
  app.require_subcommand(1, 1);
  bool machine = false;
  app.add_flag("--machine", machine, "Structured (JSON) output");

  std::size_t stages = 0, count = 0, quota = 0;
  std::uint64_t seed = 0, bound = 0, limit = 0;
  std::string out_path, diffs, tau_spec, poly;
  bool progressions_only = false;

  auto* sparse = app.add_subcommand("build-sparse", "Run the sparse-primes builder");
  sparse->add_option("--stages", stages)->required();
  sparse->add_option("--seed", seed)->required();
  sparse->add_option("--out", out_path);

  auto* main_cmd = app.add_subcommand("build-main", "Run the prime-progression builder");
  main_cmd->add_option("--diffs", diffs, "Tuples such as 2;6,12")->required();
  main_cmd->add_option("--stages", stages)->required();
  main_cmd->add_option("--seed", seed)->required();
  main_cmd->add_option("--out", out_path);

  auto* just = app.add_subcommand("build-justprimes", "Assign prime divisors to the first enumerated polynomials");
  just->add_option("--count", count)->required();
  just->add_option("--quota", quota)->required();
  just->add_option("--bound", bound)->required();
  just->add_option("--out", out_path);

  auto* cert = app.add_subcommand("certify", "Decide membership and primality of an element");
  cert->add_option("--tau", tau_spec, "State file or exact:<z>")->required();
  cert->add_option("--poly", poly)->required();

  auto* primes = app.add_subcommand("primes", "List the ledger primes of a state");
  primes->add_option("--tau", tau_spec)->required();
  primes->add_flag("--progressions-only", progressions_only);

  auto* checks = app.add_subcommand("check-s", "Test difference tuples for admissibility");
  checks->add_option("--diffs", diffs)->required();

  auto* sf = app.add_subcommand("sf", "Primes p <= limit at which a polynomial has a root");
  sf->add_option("--poly", poly)->required();
  sf->add_option("--limit", limit)->required();

  auto* oracle = app.add_subcommand("oracle-r0", "Closed-form primality at tau = 0");
  oracle->add_option("--poly", poly)->required();

  auto* show_cmd = app.add_subcommand("show", "Print a state");
  show_cmd->add_option("--tau", tau_spec)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sparse->parsed()) {
      emit_state(build_sparse(stages, seed), out_path, machine, out);
    } else if (main_cmd->parsed()) {
      std::vector<DiffTuple> D = parse_diffs(diffs);
      emit_state(build_main(D, stages, seed), out_path, machine, out);
    } else if (just->parsed()) {
      emit_state(build_justprimes(count, quota, bound), out_path, machine, out);
    } else if (cert->parsed()) {
      certify(load_tau(tau_spec), poly, machine, out);
    } else if (primes->parsed()) {
      list_primes(load_tau(tau_spec), progressions_only, machine, out);
    } else if (checks->parsed()) {
      Json results = Json::array();
      for (const DiffTuple& d : parse_diffs(diffs)) {
        const bool ok = check_S(d);
        if (!ok) err << "warning: " << tuple_text(d.values()) << " is not in S\n";
        if (machine) {
          results.push_back({{"diffs", tuple_text(d.values())}, {"in_s", ok}});
        } else {
          out << "diffs: " << tuple_text(d.values()) << "\n" << "in S: " << (ok ? "true" : "false") << "\n";
        }
      }
      if (machine) out << Json{{"results", results}}.dump(2) << "\n";
    } else if (sf->parsed()) {
      const RTauElem f = parse_poly(poly);
      std::vector<Integer> ps = sf_primes(f.num(), limit);
      if (machine) {
        Json j = Json::array();
        for (const Integer& p : ps) j.push_back(p.get_str());
        out << Json{{"poly", format(f.num())}, {"limit", limit}, {"primes", j}}.dump(2) << "\n";
      } else {
        out << "S_f up to " << limit << ":";
        for (const Integer& p : ps) out << " " << p;
        out << "\n";
      }
    } else if (oracle->parsed()) {
      const RTauElem f = parse_poly(poly);
      const bool prime = r0_prime_oracle(f);
      if (machine) {
        out << Json{{"element", format(f)}, {"prime_in_r0", prime}}.dump(2) << "\n";
      } else {
        out << "prime in R_0: " << (prime ? "true" : "false") << "\n";
      }
    } else if (show_cmd->parsed()) {
      show(load_tau(tau_spec), machine, out);
    }
  } catch (const Error& e) {
    if (machine) {
      err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 5;
  }
  return 0;
}

}  // namespace rtau::cli
