#pragma once

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yamaguti/document.hpp"

namespace yamaguti::cli {

enum class Format { Json, Text };

/// One named check inside a command report.
struct Section {
  std::string name;
  CheckReport report;
};

struct CommandReport {
  std::string command;
  std::vector<Section> sections;

  bool passed() const {
    return std::all_of(sections.begin(), sections.end(),
                       [](const Section& s) { return s.report.passed(); });
  }
};

inline nlohmann::ordered_json report_json(const CommandReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  j["verdict"] = r.passed() ? "pass" : "fail";
  ordered_json sections = ordered_json::array();
  for (const auto& s : r.sections) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["verdict"] = s.report.passed() ? "pass" : "fail";
    ordered_json counts = ordered_json::object();
    for (const auto& [axiom, count] : s.report.violation_counts()) counts[axiom] = count;
    sj["violations"] = std::move(counts);
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : s.report.witnesses()) {
      ordered_json wj;
      wj["axiom"] = w.axiom;
      ordered_json idx = ordered_json::array();
      for (auto i : w.indices) idx.push_back(i + 1);
      wj["indices"] = std::move(idx);
      wj["lhs"] = detail::vector_json(w.lhs);
      wj["rhs"] = detail::vector_json(w.rhs);
      witnesses.push_back(std::move(wj));
    }
    sj["witnesses"] = std::move(witnesses);
    sections.push_back(std::move(sj));
  }
  j["sections"] = std::move(sections);
  return j;
}

inline std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline void render(const CommandReport& r, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << report_json(r).dump(2) << "\n";
    return;
  }
  out << r.command << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& s : r.sections) {
    out << "[" << s.name << "] " << (s.report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [axiom, count] : s.report.violation_counts())
      out << "  " << std::left << std::setw(32) << axiom << count << "\n";
    for (const auto& w : s.report.witnesses()) {
      out << "  " << w.axiom << " at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) out << (i ? "," : "") << w.indices[i] + 1;
      out << "): lhs " << vector_text(w.lhs) << " rhs " << vector_text(w.rhs) << "\n";
    }
  }
}

namespace detail {

struct Context {
  Format format = Format::Json;
  Parameters params;
  std::ostream& out;
};

inline Document load(const std::string& path, const Context& ctx) {
  return load_document(path, ctx.params);
}

/// LY algebra carried by a document; Lie algebras use ⟦x,y,z⟧ = [[x,y],z].
inline LYAlgebra as_ly(const Document& d) {
  if (d.kind() == Kind::PhaseSpace) return d.as<PhaseSpace>().total;
  if (d.kind() == Kind::LieAlgebra) return ly_from_lie(d.as<LieAlgebra>());
  return d.as<LYAlgebra>();
}

inline LYAlgebra load_ly(const std::string& path, const Context& ctx) {
  return as_ly(load(path, ctx));
}

inline int finish(const CommandReport& r, const Context& ctx) {
  render(r, ctx.format, ctx.out);
  return r.passed() ? 0 : 1;
}

inline int emit_document(const Document& d, const Context& ctx) {
  ctx.out << serialize(d);
  return 0;
}

inline Representation select_rep(const LYAlgebra& a, const std::string& rep) {
  if (rep == "adjoint") return adjoint_rep(a);
  if (rep == "coadjoint") return dual_rep(adjoint_rep(a));
  throw Error("--rep must be adjoint, coadjoint or file");
}

/// The algebra/representation pair named by the first file and --rep.
inline std::pair<LYAlgebra, Representation> rep_source(const std::string& path,
                                                       const std::string& rep, const Context& ctx) {
  Document d = load(path, ctx);
  if (d.kind() == Kind::Representation) {
    if (rep != "file" && rep != "adjoint") {
      throw Error("--rep " + rep + " given but '" + path + "' is a representation document");
    }
    const auto& r = d.as<Representation>();
    return {r.base(), r};
  }
  if (rep == "file") throw Error("--rep file expects a representation document, got " +
                                 std::string(kind_name(d.kind())));
  LYAlgebra a = as_ly(d);
  return {a, select_rep(a, rep)};
}

}  // namespace detail

/// Runs the command line (without the program name). Exit codes: 0 all
/// checks pass, 1 violations found, 2 usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify and construct Lie-Yamaguti, pre-Lie-Yamaguti and related structures",
               "yamaguti"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string sample;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--sample", sample, "Parameter values, e.g. a=1,b=2/3");
  app.fallthrough();

  std::vector<std::string> files;
  std::string rep = "adjoint";
  std::string action;

  auto* check = app.add_subcommand("check", "Verify a structure");
  check->require_subcommand(1);
  check->fallthrough();
  auto add_check = [&](const char* name, const char* help, int nfiles) {
    auto* c = check->add_subcommand(name, help);
    c->add_option("files", files, "Input documents")->required()->expected(nfiles);
    c->fallthrough();
    c->callback([&action, name] { action = std::string("check ") + name; });
    return c;
  };
  add_check("ly", "Lie-Yamaguti identities", 1);
  add_check("pre-ly", "Pre-Lie-Yamaguti axioms and consequences", 1);
  add_check("rep", "Representation equations and consequences", 1);
  add_check("quadratic", "Invariant form and adjoint/coadjoint isomorphism", 2);
  add_check("rbo", "Relative Rota-Baxter operator", 2)
      ->add_option("--rep", rep, "adjoint, coadjoint or file")
      ->check(CLI::IsMember({"adjoint", "coadjoint", "file"}));
  add_check("symplectic", "Symplectic structure and the Rota-Baxter equivalence", 2);
  add_check("manin", "Manin triple of pre-Lie-Yamaguti algebras", 1);
  add_check("phase-space", "Phase space and perfectness", 1);

  auto* derive = app.add_subcommand("derive", "Derive a structure");
  derive->require_subcommand(1);
  derive->fallthrough();
  bool from_rbo = false, from_symplectic = false, from_lie = false, from_pre_ly = false;
  auto* derive_pre = derive->add_subcommand("pre-ly", "Pre-Lie-Yamaguti algebra");
  derive_pre->add_flag("--from-rbo", from_rbo, "u*v = ρ(Tu)v, {u,v,w} = μ(Tv,Tw)u");
  derive_pre->add_flag("--from-symplectic", from_symplectic, "Compatible structure of ω");
  derive_pre->add_option("--rep", rep, "adjoint, coadjoint or file")
      ->check(CLI::IsMember({"adjoint", "coadjoint", "file"}));
  derive_pre->add_option("files", files, "Algebra (or representation) and operator or form")
      ->required()
      ->expected(2);
  derive_pre->fallthrough();
  derive_pre->callback([&] { action = "derive pre-ly"; });
  auto* derive_ly = derive->add_subcommand("ly", "Lie-Yamaguti algebra");
  derive_ly->add_flag("--from-lie", from_lie, "⟦x,y,z⟧ = [[x,y],z]");
  derive_ly->add_flag("--from-pre-ly", from_pre_ly, "Subadjacent algebra");
  derive_ly->add_option("files", files, "Input document")->required()->expected(1);
  derive_ly->fallthrough();
  derive_ly->callback([&] { action = "derive ly"; });

  auto* build = app.add_subcommand("build", "Build a structure");
  build->require_subcommand(1);
  build->fallthrough();
  auto* build_ps = build->add_subcommand("phase-space", "Phase space of a pre-LY algebra");
  build_ps->add_option("files", files, "Pre-LY document")->required()->expected(1);
  build_ps->fallthrough();
  build_ps->callback([&] { action = "build phase-space"; });

  auto* roundtrip = app.add_subcommand("roundtrip", "Pre-LY → phase space → Manin triple");
  roundtrip->add_option("files", files, "Pre-LY document")->required()->expected(1);
  roundtrip->fallthrough();
  roundtrip->callback([&] { action = "roundtrip"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  detail::Context ctx{format == "text" ? Format::Text : Format::Json, {}, out};
  try {
    if (!sample.empty()) ctx.params = parse_parameters(sample);
    CommandReport report{action, {}};
    auto add = [&](std::string name, CheckReport r) {
      report.sections.push_back({std::move(name), std::move(r)});
    };

    if (action == "check ly") {
      Document d = detail::load(files[0], ctx);
      if (d.kind() == Kind::LieAlgebra) {
        const auto& lie = d.as<LieAlgebra>();
        CheckReport jacobi = check_jacobi(lie);
        add("lie-jacobi", jacobi);
        if (jacobi.passed()) add("ly-axioms", check_ly_axioms(ly_from_lie(lie)));
      } else {
        add("ly-axioms", check_ly_axioms(detail::as_ly(d)));
      }
    } else if (action == "check pre-ly") {
      auto p = detail::load(files[0], ctx).as<PreLYAlgebra>();
      add("pre-ly-axioms", check_pre_ly_axioms(p));
      add("pre-ly-consequences", check_pre_ly_lemma(p));
    } else if (action == "check rep") {
      auto r = detail::load(files[0], ctx).as<Representation>();
      add("representation", check_representation(r.base(), r));
      add("derived-identities", check_derived_identities(r.base(), r));
    } else if (action == "check quadratic") {
      auto a = detail::load_ly(files[0], ctx);
      auto b = detail::load(files[1], ctx).as<BilinearForm>();
      add("quadratic", check_quadratic(a, b));
      if (b.dim() == a.dim() && rank(b.gram()) == b.dim())
        add("adjoint-coadjoint-iso", check_adjoint_coadjoint_iso(a, b));
    } else if (action == "check rbo") {
      auto [a, r] = detail::rep_source(files[0], rep, ctx);
      auto t = detail::load(files[1], ctx).as<Matrix>();
      add("rota-baxter", check_relative_rbo(a, r, t));
    } else if (action == "check symplectic") {
      auto a = detail::load_ly(files[0], ctx);
      auto w = detail::load(files[1], ctx).as<SymplecticForm>();
      auto eq = verify_rbsym_equivalence(a, w);
      add("symplectic", eq.symplectic);
      add("rota-baxter-coadjoint", eq.rbo);
      CheckReport agreement;
      agreement.declare("rbsym.agreement");
      if (!eq.agree()) {
        agreement.add({"rbsym.agreement", {},
                       Vector{Scalar(eq.symplectic.passed() ? 1 : 0)},
                       Vector{Scalar(eq.rbo.passed() ? 1 : 0)}});
      }
      add("equivalence", agreement);
    } else if (action == "check manin") {
      add("manin-triple", check_manin_triple(detail::load(files[0], ctx).as<ManinTripleInput>()));
    } else if (action == "check phase-space") {
      auto ps = detail::load(files[0], ctx).as<PhaseSpace>();
      CheckReport phase = check_phase_space(ps);
      add("phase-space", phase);
      add("perfect", check_perfect(ps));
    } else if (action == "derive pre-ly") {
      if (from_rbo == from_symplectic) throw Error("give exactly one of --from-rbo, --from-symplectic");
      if (from_rbo) {
        auto [a, r] = detail::rep_source(files[0], rep, ctx);
        auto t = detail::load(files[1], ctx).as<Matrix>();
        CheckReport rb = check_relative_rbo(a, r, t);
        if (!rb.passed()) {
          add("rota-baxter", rb);
          return detail::finish(report, ctx);
        }
        return detail::emit_document({induced_pre_ly(a, r, t)}, ctx);
      }
      auto a = detail::load_ly(files[0], ctx);
      auto w = detail::load(files[1], ctx).as<SymplecticForm>();
      CheckReport sy = check_symplectic(a, w);
      if (!sy.passed()) {
        add("symplectic", sy);
        return detail::finish(report, ctx);
      }
      return detail::emit_document({compatible_pre_ly_from_symplectic(a, w)}, ctx);
    } else if (action == "derive ly") {
      if (from_lie == from_pre_ly) throw Error("give exactly one of --from-lie, --from-pre-ly");
      Document d = detail::load(files[0], ctx);
      if (from_lie) {
        CheckReport jacobi = check_jacobi(d.as<LieAlgebra>());
        if (!jacobi.passed()) {
          add("lie-jacobi", jacobi);
          return detail::finish(report, ctx);
        }
        return detail::emit_document({ly_from_lie(d.as<LieAlgebra>())}, ctx);
      }
      return detail::emit_document({subadjacent(d.as<PreLYAlgebra>())}, ctx);
    } else if (action == "build phase-space") {
      auto p = detail::load(files[0], ctx).as<PreLYAlgebra>();
      CheckReport axioms = check_pre_ly_axioms(p);
      if (!axioms.passed()) {
        add("pre-ly-axioms", axioms);
        return detail::finish(report, ctx);
      }
      return detail::emit_document({build_phase_space(p)}, ctx);
    } else if (action == "roundtrip") {
      auto p = detail::load(files[0], ctx).as<PreLYAlgebra>();
      CheckReport axioms = check_pre_ly_axioms(p);
      add("pre-ly-axioms", axioms);
      if (axioms.passed()) {
        auto rt = roundtrip_correspondence(p);
        add("phase-space", rt.phase);
        add("manin-triple", rt.manin);
        add("restriction", rt.restriction);
        add("perfect", rt.perfect);
      }
    }
    return detail::finish(report, ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace yamaguti::cli
