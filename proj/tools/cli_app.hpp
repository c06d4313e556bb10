#ifndef TSPEC_TOOLS_CLI_APP_HPP
#define TSPEC_TOOLS_CLI_APP_HPP

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tspec/io.hpp"
#include "tspec/tspec.hpp"

namespace tspec::cli {

using io::json;

enum ExitCode : int { Ok = 0, ComputationError = 1, UsageError = 2 };

/// An algebra loaded from a catalog reference or a JSON file.
struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::optional<CatalogEntry> entry;
  json reference;  ///< what module dumps record in their "algebra" field
};

inline LoadedAlgebra load_algebra(const std::string& ref) {
  LoadedAlgebra out;
  if (ref.rfind("catalog:", 0) == 0) {
    out.entry = catalog_lookup(ref.substr(8));
    out.algebra = out.entry->algebra;
    out.reference = ref.substr(8);
    return out;
  }
  const json j = io::load_file(ref);
  out.algebra = std::make_shared<const LieAlgebra>(io::algebra_from_json(j, ref));
  out.reference = io::algebra_to_json(*out.algebra);
  return out;
}

/// A module name understood by the catalog entry, "trivial"/"adjoint"/"char:…", or a JSON file.
inline Representation load_module(const LoadedAlgebra& a, const std::string& ref) {
  if (std::filesystem::is_regular_file(ref)) return io::module_from_json(io::load_file(ref), a.algebra, ref);
  if (a.entry) return a.entry->module(ref);
  if (ref == "trivial") return Representation::trivial(a.algebra);
  if (ref == "adjoint") return adjoint_rep(a.algebra);
  if (ref.rfind("char:", 0) == 0) {
    CatalogEntry generic;
    generic.algebra = a.algebra;
    generic.module_factory = [](std::string_view) { return std::nullopt; };
    return generic.module(ref);
  }
  throw Error(Errc::UnknownName, "no module '" + ref + "' (not a file, trivial, adjoint or char:…)");
}

inline RatVector parse_vector(const std::string& text) {
  RatVector v;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    v.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return v;
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "]";
}

struct Options {
  std::string format = "json";
  bool error_json = false;
  unsigned jobs = 1;
  std::string algebra;
  std::string module = "trivial";
  bool dump_complex = false;
  std::string method = "both";
  std::string candidates_file;
  std::vector<std::string> candidate_names;
  std::vector<std::string> catalog_args;
  std::string weight;
  std::string lambda;
  std::vector<std::string> cocycle;
  std::string generator = "c";
  std::string suite = "all";
};

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.catalog_args.empty()) {
    if (o.format == "table") {
      for (const auto& n : catalog_names()) out << n << "\n";
    } else {
      emit(out, {{"format_version", io::format_version}, {"entries", catalog_names()}});
    }
    return Ok;
  }
  if (o.catalog_args[0] != "dump" || o.catalog_args.size() < 2 || o.catalog_args.size() > 3)
    throw CLI::ValidationError("catalog", "usage: catalog [dump <name[:params]> [module]]");
  const CatalogEntry e = catalog_lookup(o.catalog_args[1]);
  if (o.catalog_args.size() == 3)
    emit(out, io::module_to_json(e.module(o.catalog_args[2]), e.full_name()));
  else
    emit(out, io::algebra_to_json(*e.algebra));
  return Ok;
}

inline int cmd_info(const Options& o, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(o.algebra);
  const LieAlgebra& g = *a.algebra;
  json j;
  j["format_version"] = io::format_version;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  const auto cls = classify(g);
  j["class"] = cls ? std::string(class_name(*cls)) : "other";
  j["nilpotent"] = is_nilpotent(g);
  j["solvable"] = is_solvable(g);
  j["semisimple"] = is_semisimple(g);
  j["derived_dim"] = derived_subalgebra(g).dim();
  j["character_space_dim"] = character_space(g).dim();
  if (is_solvable(g)) {
    j["two_rho"] = io::character_to_json(two_rho(g));
    json jh = json::array();
    for (const auto& c : jordan_holder_values(a.algebra)) jh.push_back(io::character_to_json(c));
    j["jordan_holder_values"] = jh;
  }
  if (a.entry) {
    j["modules"] = a.entry->module_names;
    if (a.entry->root_system) j["root_system"] = a.entry->root_system->name;
  }
  if (o.format == "table") {
    out << "dim        " << g.dim() << "\nclass      " << j["class"].get<std::string>() << "\nderived    "
        << j["derived_dim"] << "\ncharacters " << j["character_space_dim"] << "\n";
    if (j.contains("two_rho")) out << "two_rho    " << to_string(two_rho(g)) << "\n";
    return Ok;
  }
  emit(out, j);
  return Ok;
}

inline int cmd_betti(const Options& o, bool cohomological, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(o.algebra);
  const Representation v = load_module(a, o.module);
  const ChainComplex c = cohomological ? cochain_complex(v) : chain_complex(v);
  const BettiTable t = betti_numbers(c);
  if (o.format == "table") {
    out << (cohomological ? "k  dim H^k" : "k  dim H_k") << "\n";
    for (std::size_t k = 0; k < t.size(); ++k) out << k << "  " << t[k] << "\n";
    return Ok;
  }
  json j;
  j["format_version"] = io::format_version;
  j["kind"] = cohomological ? "cohomology" : "homology";
  j["betti"] = t.values;
  if (o.dump_complex) j["complex"] = io::complex_to_json(c);
  emit(out, j);
  return Ok;
}

inline int cmd_weights(const Options& o, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(o.algebra);
  const WeightTable t = weights(load_module(a, o.module));
  if (o.format == "table") {
    for (const auto& [mu, mult] : t.entries) out << to_string(mu) << "  x" << mult << "\n";
    return Ok;
  }
  json entries = json::array();
  for (const auto& [mu, mult] : t.entries)
    entries.push_back({{"weight", io::character_to_json(mu)}, {"multiplicity", mult}});
  emit(out, {{"format_version", io::format_version}, {"weights", entries}});
  return Ok;
}

inline Method parse_method(const std::string& m) {
  if (m == "homological") return Method::Homological;
  if (m == "shortcut") return Method::Shortcut;
  return Method::Both;
}

inline std::vector<NamedModule> load_candidates(const Options& o, const LoadedAlgebra& a) {
  std::vector<NamedModule> out;
  if (!o.candidates_file.empty()) {
    const json j = io::load_file(o.candidates_file);
    io::detail::check_version(j, o.candidates_file);
    const json& list = io::detail::field(j, "candidates", o.candidates_file);
    if (!list.is_array()) throw Error(Errc::Parse, o.candidates_file + ": candidates must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = o.candidates_file + ".candidates[" + std::to_string(i) + "]";
      const json& label = io::detail::field(list[i], "label", where);
      const json& mod = io::detail::field(list[i], "module", where);
      if (!label.is_string()) throw Error(Errc::Parse, where + ": label must be a string");
      out.push_back({label.get<std::string>(), mod.is_string() ? load_module(a, mod.get<std::string>())
                                                               : io::module_from_json(mod, a.algebra, where)});
    }
  }
  for (const auto& n : o.candidate_names) out.push_back({n, load_module(a, n)});
  return out;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(o.algebra);
  const Representation v = load_module(a, o.module);
  const LieAlgebra& g = *a.algebra;
  const Method method = parse_method(o.method);
  SpectrumReport r;
  if (is_nilpotent(g)) {
    r = spectrum_nilpotent(v, method);
  } else if (is_solvable(g)) {
    r = spectrum_solvable(v, o.jobs);
  } else if (is_semisimple(g)) {
    const auto cands = load_candidates(o, a);
    if (cands.empty())
      throw CLI::ValidationError("spectrum", "semisimple algebras need --candidates <file> or --candidate <module>");
    r = spectrum_semisimple(v, cands, method);
  } else {
    throw Error(Errc::Unsupported, "algebra is neither solvable nor semisimple");
  }
  if (o.format == "table") {
    out << "class " << class_name(r.algebra_class) << ", method " << method_name(r.method) << ", "
        << r.candidates_tested << " candidates tested\n";
    for (const auto& e : r.elements)
      out << e.label << (e.evidence ? "  H_* = " + join(e.evidence->values) : std::string()) << "\n";
    for (const auto& d : r.disagreements) out << "DISAGREEMENT " << d << "\n";
    return Ok;
  }
  emit(out, io::spectrum_to_json(r));
  return Ok;
}

inline int cmd_borel_check(const Options& o, std::ostream& out) {
  std::string name = o.algebra;
  if (name.rfind("catalog:", 0) == 0) name = name.substr(8);
  const CatalogEntry b = borel_of(name);
  const RatVector lambda = parse_vector(o.weight);
  if (!is_dominant_integral(*b.root_system, lambda))
    throw Error(Errc::BadParams, "highest weight " + to_string(lambda) + " is not dominant integral");
  const BorelSpectrumReport r = check_borel_spectrum(b, lambda, o.jobs);
  if (o.format == "table") {
    out << "formula  " << detail::render(r.formula) << "\nhomology " << detail::render(r.computed) << "\n"
        << (r.ok ? "PASS" : "FAIL") << "\n";
  } else {
    json f = json::array(), c = json::array();
    for (const auto& x : r.formula) f.push_back(io::to_json(x));
    for (const auto& x : r.computed) c.push_back(io::to_json(x));
    emit(out, {{"format_version", io::format_version},
               {"borel", b.full_name()},
               {"highest_weight", io::to_json(lambda)},
               {"formula", f},
               {"homology", c},
               {"pass", r.ok}});
  }
  return r.ok ? Ok : ComputationError;
}

inline int cmd_extend(const Options& o, std::ostream& out) {
  const LoadedAlgebra a = load_algebra(o.algebra);
  ExtensionSpec spec;
  spec.base = a.algebra;
  spec.lambda = o.lambda.empty() ? Character::zero(*a.algebra) : Character(*a.algebra, parse_vector(o.lambda));
  spec.new_generator = o.generator;
  for (const auto& entry : o.cocycle) {
    // "i,j=p/q" with 1-based indices
    const auto eq = entry.find('=');
    const auto comma = entry.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq)
      throw Error(Errc::Parse, "cocycle entry '" + entry + "' is not of the form i,j=p/q");
    std::size_t i = 0, j = 0;
    try {
      i = std::stoul(entry.substr(0, comma));
      j = std::stoul(entry.substr(comma + 1, eq - comma - 1));
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "cocycle entry '" + entry + "' has bad indices");
    }
    if (i == 0 || j == 0 || i == j || i > a.algebra->dim() || j > a.algebra->dim())
      throw Error(Errc::Parse, "cocycle entry '" + entry + "' has indices out of range");
    Rational q = parse_rational(entry.substr(eq + 1));
    if (i > j) {
      std::swap(i, j);
      q = -q;
    }
    spec.cocycle[{i - 1, j - 1}] += q;
  }
  emit(out, io::algebra_to_json(*build_extension(spec).algebra));
  return Ok;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const auto results = run_suite(o.suite);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.ok ? 0 : 1;
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.ok}, {"detail", r.detail}});
    emit(out, {{"format_version", io::format_version},
               {"suite", o.suite},
               {"passed", results.size() - failed},
               {"failed", failed},
               {"checks", list}});
  } else {
    for (const auto& r : results)
      out << (r.ok ? "PASS  " : "FAIL  ") << std::left << std::setw(11) << r.suite << r.name
          << (r.ok ? std::string() : "  (" + r.detail + ")") << "\n";
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed ? ComputationError : Ok;
}

inline int usage_exit(const std::string& msg, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.error_json)
    emit(out, {{"error", {{"code", "Usage"}, {"message", msg}}}});
  else
    err << "error: " << msg << "\n";
  return UsageError;
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Lie algebra (co)homology and Taylor spectrum toolkit", "tspec"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--error-json", o.error_json, "Print computation errors as JSON on stdout");
  app.add_option("--jobs", o.jobs, "Worker threads for candidate evaluation")->check(CLI::Range(1U, 256U));

  auto* catalog = app.add_subcommand("catalog", "List catalog entries, or `catalog dump <name> [module]`");
  catalog->add_option("args", o.catalog_args, "dump <name[:params]> [module]");

  auto add_algebra = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--algebra", o.algebra, "catalog:<name[:params]> or an algebra JSON file");
    if (required) opt->required();
  };
  auto add_module = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "Catalog module name, trivial, adjoint, char:a,b,… or a module JSON file")
        ->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Structure summary of an algebra");
  add_algebra(info);
  auto* homology = app.add_subcommand("homology", "Betti numbers of H_*(g, V)");
  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers of H^*(g, V)");
  for (auto* sub : {homology, cohomology}) {
    add_algebra(sub);
    add_module(sub);
    sub->add_flag("--dump-complex", o.dump_complex, "Include the differential matrices");
  }
  auto* weights_cmd = app.add_subcommand("weights", "Generalized weights of a module over a solvable algebra");
  add_algebra(weights_cmd);
  add_module(weights_cmd);
  auto* spectrum = app.add_subcommand("spectrum", "Taylor spectrum of a module");
  add_algebra(spectrum);
  add_module(spectrum);
  spectrum->add_option("--method", o.method, "Membership test")
      ->check(CLI::IsMember({"homological", "shortcut", "both"}))
      ->capture_default_str();
  spectrum->add_option("--candidates", o.candidates_file, "JSON file of candidate simple modules")
      ->check(CLI::ExistingFile);
  spectrum->add_option("--candidate", o.candidate_names, "Candidate module by name (repeatable)");
  auto* borel = app.add_subcommand("borel-check", "Closed-form Borel spectrum against homology");
  add_algebra(borel);
  borel->add_option("--weight", o.weight, "Highest weight as comma-separated Cartan values")->required();
  auto* extend = app.add_subcommand("extend", "One-dimensional extension by a cocycle");
  add_algebra(extend);
  extend->add_option("--lambda", o.lambda, "Character λ of the base as comma-separated values");
  extend->add_option("--cocycle", o.cocycle, "Cocycle entry i,j=p/q with 1-based indices (repeatable)");
  extend->add_option("--name", o.generator, "Name of the new generator")->capture_default_str();
  auto* check = app.add_subcommand("check", "Run self-check suites");
  check->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return UsageError;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (info->parsed()) return cmd_info(o, out);
    if (homology->parsed()) return cmd_betti(o, false, out);
    if (cohomology->parsed()) return cmd_betti(o, true, out);
    if (weights_cmd->parsed()) return cmd_weights(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (borel->parsed()) return cmd_borel_check(o, out);
    if (extend->parsed()) return cmd_extend(o, out);
    if (check->parsed()) return cmd_check(o, out);
  } catch (const CLI::ValidationError& e) {
    return usage_exit(e.what(), o, out, err);
  } catch (const Error& e) {
    const bool usage = e.code() == Errc::Parse || e.code() == Errc::UnknownName || e.code() == Errc::BadParams;
    if (o.error_json)
      emit(out, {{"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}});
    else
      err << "error: " << e.what() << "\n";
    return usage ? UsageError : ComputationError;
  }
  return UsageError;
}

}  // namespace tspec::cli

#endif  // TSPEC_TOOLS_CLI_APP_HPP
