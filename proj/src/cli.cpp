#include "lsc/cli.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsc/cohomology.h"
#include "lsc/errors.h"
#include "lsc/io.h"
#include "lsc/reproduce.h"
#include "lsc/restricted.h"
#include "lsc/superalgebra.h"

namespace lsc {

namespace {

using nlohmann::json;

json dims_json(const ParityDims& d) {
  return json{{"even", d.even}, {"odd", d.odd}};
}

// a sparse coordinate vector as a list of {label, coeff} terms
json terms_json(const SparseVector& v,
                const std::function<std::string(std::size_t)>& label,
                const char* label_key) {
  json arr = json::array();
  for (const auto& [i, c] : v.entries())
    arr.push_back(json{{label_key, label(i)}, {"coeff", c.str()}});
  return arr;
}

json representatives_json(const std::array<std::vector<SparseVector>, 2>& reps,
                          const CochainSpace& space) {
  const auto name = [&](std::size_t i) { return space.element_name(i); };
  json out;
  out["even"] = json::array();
  out["odd"] = json::array();
  for (const SparseVector& r : reps[0]) out["even"].push_back(terms_json(r, name, "cochain"));
  for (const SparseVector& r : reps[1]) out["odd"].push_back(terms_json(r, name, "cochain"));
  return out;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& s, const char* what) {
  std::vector<std::uint32_t> out;
  if (s.empty() || s == "-") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || tok.empty()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": '" + tok + "' is not a natural number");
    }
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    if (comma > pos) out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

SuperAlgebra load_algebra(const std::string& path) {
  return parse_algebra(read_input(path));
}

json report_skeleton(const std::string& command, const SuperAlgebra& g) {
  json report;
  report["tool"] = "lsc 0.1.0";
  report["command"] = command;
  report["algebra"] = g.descriptor();
  report["field"] = g.field().str();
  return report;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit(std::ostream& out, json& report, const Timer& timer) {
  report["timing_seconds"] = timer.seconds();
  out << report.dump(2) << "\n";
}

json cohomology_dims_json(const CohomologyResult& r) {
  json out;
  out["cochains"] = dims_json(r.cochains);
  out["cocycles"] = dims_json(r.cocycles);
  out["coboundaries"] = dims_json(r.coboundaries);
  out["cohomology"] = dims_json(r.cohomology);
  return out;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cohomology and restrictedness of Lie superalgebra families"};
  app.name("lsc");
  app.require_subcommand(1);

  std::string alg_path, fam_kind, field_str = "Q", emit_path = "-", torus_names;
  std::vector<std::string> fam_params;
  std::uint32_t q = 0, trials = 32, p_flag = 0, max_n = 6;
  bool blocks = false, representatives = false, long_run = false;
  std::string primes_str = "3,5";

  CLI::App* c_validate = app.add_subcommand("validate", "check a spec file's algebra axioms");
  c_validate->add_option("spec", alg_path, "algebra spec file, or - for stdin")->required();

  CLI::App* c_family = app.add_subcommand("family", "construct a built-in family instance");
  c_family->add_option("kind", fam_kind, "L, SL, N, or SN")
      ->required()
      ->check(CLI::IsMember({"L", "SL", "N", "SN"}));
  c_family
      ->add_option("params", fam_params,
                   "L/SL: n m; N/SN: comma list ns, then ms (use - for none)")
      ->required()
      ->expected(1, 2);
  c_family->add_option("--field", field_str, "Q (default) or Fp:<odd prime>");
  c_family->add_option("--emit", emit_path, "output path (default -, stdout)");

  CLI::App* c_cohom = app.add_subcommand("cohomology", "adjoint cohomology dimensions");
  c_cohom->add_option("alg", alg_path, "algebra spec file, or - for stdin")->required();
  c_cohom->add_option("--q", q, "cochain degree")->required();
  c_cohom->add_flag("--blocks", blocks, "split by weight blocks of the finest grading");
  c_cohom->add_flag("--representatives", representatives, "include representative cocycles");

  CLI::App* c_deriv = app.add_subcommand("derivations", "H^0/H^1 with inner-derivation witnesses");
  c_deriv->add_option("alg", alg_path, "algebra spec file, or - for stdin")->required();

  CLI::App* c_charseq = app.add_subcommand("charseq", "characteristic sequence and s-nilindex");
  c_charseq->add_option("alg", alg_path, "algebra spec file, or - for stdin")->required();
  c_charseq->add_option("--trials", trials, "random candidate budget (default 32)");

  CLI::App* c_restr = app.add_subcommand("restricted", "decide the p-th power structure");
  c_restr->add_option("alg", alg_path, "algebra spec file, or - for stdin")->required();
  c_restr->add_option("--p", p_flag, "prime (required for rational input; reduces mod p)");

  CLI::App* c_hs = app.add_subcommand("hs-check", "solvable factorization identity");
  c_hs->add_option("alg", alg_path, "algebra spec file, or - for stdin")->required();
  c_hs->add_option("--torus", torus_names, "comma-separated torus basis names")->required();
  c_hs->add_option("--q", q, "cohomology degree")->required();

  CLI::App* c_repro = app.add_subcommand("reproduce-paper", "run the full verification suite");
  c_repro->add_option("--primes", primes_str, "char-p pattern primes (default 3,5)");
  c_repro->add_option("--max-n", max_n, "n cap for the characteristic-0 grids (default 6)");
  c_repro->add_flag("--long", long_run, "also run p = 7 and p = 11");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(c_validate)) {
      const SuperAlgebra g = parse_algebra(read_input(alg_path), false);
      const ValidationReport rep = g.validate();
      json report = report_skeleton("validate", g);
      report["results"] = json{{"valid", rep.ok()},
                               {"parity_ok", rep.parity_ok},
                               {"antisymmetry_ok", rep.antisymmetry_ok},
                               {"jacobi_ok", rep.jacobi_ok}};
      if (!rep.ok()) report["results"]["detail"] = rep.describe(g.basis());
      out << report.dump(2) << "\n";
      return rep.ok() ? 0 : 1;
    }

    if (app.got_subcommand(c_family)) {
      const Field f = Field::parse(field_str);
      std::optional<SuperAlgebra> g;
      if (fam_kind == "L" || fam_kind == "SL") {
        if (fam_params.size() != 2)
          throw ParseError(fam_kind + " takes two parameters: n m");
        const auto n = parse_uint_list(fam_params[0], "n");
        const auto m = parse_uint_list(fam_params[1], "m");
        if (n.size() != 1 || m.size() != 1)
          throw ParseError(fam_kind + " takes two single numbers: n m");
        g = fam_kind == "L" ? model_filiform(n[0], m[0], f)
                            : solvable_model_filiform(n[0], m[0], f);
      } else {
        const auto ns = parse_uint_list(fam_params[0], "ns");
        const auto ms = parse_uint_list(
            fam_params.size() > 1 ? fam_params[1] : std::string("-"), "ms");
        g = fam_kind == "N" ? model_nilpotent(ns, ms, f)
                            : solvable_model_nilpotent(ns, ms, f);
      }
      write_output(emit_path, serialize_algebra(*g));
      return 0;
    }

    if (app.got_subcommand(c_cohom)) {
      const Timer timer;
      const SuperAlgebra g = load_algebra(alg_path);
      const GModule adj = GModule::adjoint(g);
      const CochainSpace space(adj, q);
      CohomologyOptions copts;
      copts.representatives = representatives;
      json report = report_skeleton("cohomology", g);
      json results;
      results["q"] = q;
      if (blocks) {
        const WeightGrading grading = g.family() ? family_grading(g) : canonical_grading(g);
        if (grading.characters() == 0)
          throw DomainError("the algebra admits no nonzero grading character");
        json blist = json::array();
        ParityDims totals;
        for (const WeightBlockResult& b : weight_blocks(adj, q, grading, 0, copts)) {
          json bj;
          bj["weight"] = b.weight;
          bj["cochains"] = dims_json(b.cochains);
          bj["cocycles"] = dims_json(b.cocycles);
          bj["coboundaries"] = dims_json(b.coboundaries);
          bj["cohomology"] = dims_json(b.cohomology);
          if (representatives) bj["representatives"] = representatives_json(b.representatives, space);
          blist.push_back(std::move(bj));
          totals.even += b.cohomology.even;
          totals.odd += b.cohomology.odd;
        }
        results["blocks"] = std::move(blist);
        results["cohomology"] = dims_json(totals);
      } else {
        const CohomologyResult r = cohomology(adj, q, copts);
        results.update(cohomology_dims_json(r));
        if (representatives)
          results["representatives"] = representatives_json(r.representatives, space);
      }
      report["results"] = std::move(results);
      emit(out, report, timer);
      return 0;
    }

    if (app.got_subcommand(c_deriv)) {
      const Timer timer;
      const SuperAlgebra g = load_algebra(alg_path);
      const GModule adj = GModule::adjoint(g);
      CohomologyOptions copts;
      copts.representatives = true;
      const CohomologyResult h0 = cohomology(adj, 0, copts);
      const CohomologyResult h1 = cohomology(adj, 1, copts);
      const CochainSpace c0(adj, 0), c1(adj, 1);
      const SparseMatrix d0 = differential_matrix(adj, 0);
      const auto c1_name = [&](std::size_t i) { return c1.element_name(i); };

      json report = report_skeleton("derivations", g);
      json results;
      results["H0"] = cohomology_dims_json(h0);
      results["H0"]["representatives"] = representatives_json(h0.representatives, c0);
      results["H1"] = cohomology_dims_json(h1);
      results["H1"]["representatives"] = representatives_json(h1.representatives, c1);
      json inner = json::array();
      for (std::size_t k = 0; k < g.dim(); ++k) {
        SparseVector e(g.dim(), g.field());
        e.set(k, Scalar::one(g.field()));
        inner.push_back(json{{"generator", g.basis(k).name},
                             {"derivation", terms_json(d0.apply(e), c1_name, "cochain")}});
      }
      results["inner_derivations"] = std::move(inner);
      report["results"] = std::move(results);
      emit(out, report, timer);
      return 0;
    }

    if (app.got_subcommand(c_charseq)) {
      const Timer timer;
      const SuperAlgebra g = load_algebra(alg_path);
      const auto seqs = central_sequences(g);
      if (!seqs)
        throw DomainError(g.descriptor() +
                          " is not nilpotent: the descending central sequence stabilizes "
                          "nonzero, so the characteristic sequence is undefined");
      const CharacteristicSequence cs = characteristic_sequence(g, trials);
      json report = report_skeleton("charseq", g);
      report["results"] =
          json{{"even_part", cs.even_part},
               {"odd_part", cs.odd_part},
               {"printed", cs.str()},
               {"nilindex", seqs->nilindex},
               {"s_nilindex", json::array({seqs->s_nilindex.first, seqs->s_nilindex.second})}};
      emit(out, report, timer);
      return 0;
    }

    if (app.got_subcommand(c_restr)) {
      const Timer timer;
      SuperAlgebra g = load_algebra(alg_path);
      if (g.field().is_rational() && p_flag == 0)
        throw ParseError("rational input needs --p <odd prime> to reduce mod p");
      const SuperAlgebra gp =
          p_flag == 0 ? std::move(g) : with_field(g, Field::prime(p_flag));
      const auto basis_name = [&](std::size_t i) { return gp.basis(i).name; };

      json report = report_skeleton("restricted", gp);
      json results;
      results["p"] = gp.field().characteristic();
      const RestrictednessResult res = p_map_exists(gp);
      if (const PMap* pm = std::get_if<PMap>(&res)) {
        results["restricted"] = true;
        results["unique"] = pm->unique;
        results["sr1_verified"] = verify_sr1(gp, *pm);
        json images = json::array();
        std::size_t even_seen = 0;
        for (std::size_t i = 0; i < gp.dim(); ++i) {
          if (gp.parity(i) != Parity::even) continue;
          images.push_back(json{{"element", gp.basis(i).name},
                                {"image", terms_json(pm->images[even_seen], basis_name,
                                                     "basis")}});
          ++even_seen;
        }
        results["images"] = std::move(images);
      } else {
        const ObstructionWitness& w = std::get<ObstructionWitness>(res);
        results["restricted"] = false;
        results["obstruction_at"] = gp.basis(w.basis_index).name;
        results["certificate"] = json{{"functional_support", w.functional.nnz()},
                                      {"value", w.value.str()}};
        results["probes"] = w.probes;
      }
      report["results"] = std::move(results);
      emit(out, report, timer);
      return 0;
    }

    if (app.got_subcommand(c_hs)) {
      const Timer timer;
      const SuperAlgebra g = load_algebra(alg_path);
      std::vector<std::size_t> torus;
      for (const std::string& name : split_names(torus_names)) {
        const auto idx = g.index_of(name);
        if (!idx) throw DomainError("no basis vector named '" + name + "'");
        torus.push_back(*idx);
      }
      std::vector<std::size_t> nil;
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (std::find(torus.begin(), torus.end(), i) == torus.end()) nil.push_back(i);
      const HochschildSerreCheck chk = hochschild_serre_check(g, nil, torus, q);
      json report = report_skeleton("hs-check", g);
      json results;
      results["q"] = q;
      results["direct"] = dims_json(chk.direct);
      results["reconstructed"] = dims_json(chk.reconstructed);
      json inv = json::array();
      for (const ParityDims& d : chk.invariant_dims) inv.push_back(dims_json(d));
      results["invariant_dims"] = std::move(inv);
      results["match"] = chk.match;
      report["results"] = std::move(results);
      emit(out, report, timer);
      return 0;
    }

    if (app.got_subcommand(c_repro)) {
      AcceptanceOptions opts;
      opts.primes = parse_uint_list(primes_str, "--primes");
      opts.long_run = long_run;
      opts.max_n = max_n;
      const std::vector<CheckResult> results = run_acceptance(opts, out);
      std::size_t passed = 0;
      for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
      out << passed << "/" << results.size() << " checks passed\n";
      if (passed == results.size()) return 0;
      for (const CheckResult& r : results)
        if (!r.pass) err << "failed: " << r.name << ": " << r.detail << "\n";
      return 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lsc
