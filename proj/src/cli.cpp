#include "symbalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "symbalg/cover.hpp"
#include "symbalg/forms.hpp"
#include "symbalg/gallery.hpp"
#include "symbalg/json_io.hpp"
#include "symbalg/matoracle.hpp"
#include "symbalg/valuation.hpp"

namespace symbalg {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte position of the failure
    throw InvalidInput(path + ": " + e.what());
  }
}

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw InvalidInput("bad integer list entry: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

// "a1=5,b1=3,a2=..." -> specialization point in slot order a1,b1,a2,b2,...
// values are field-element indices over the context's base field.
std::vector<Fq> parse_spec_point(const std::string& s, const CtxPtr& ctx) {
  std::vector<std::optional<std::uint64_t>> slots(ctx->nvars());
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InvalidInput("bad spec entry: " + tok);
    std::string name = tok.substr(0, eq);
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
      throw InvalidInput("spec names must be a1,b1,a2,...: " + name);
    unsigned i = std::stoul(name.substr(1));
    if (i < 1 || i > ctx->m) throw InvalidInput("spec index out of range: " + name);
    size_t slot = 2 * (i - 1) + (name[0] == 'b' ? 1 : 0);
    slots[slot] = std::stoull(tok.substr(eq + 1));
  }
  std::vector<Fq> pt;
  for (size_t s2 = 0; s2 < slots.size(); ++s2) {
    if (!slots[s2]) throw InvalidInput("spec point is missing a slot");
    if (*slots[s2] >= ctx->base->order())
      throw InvalidInput("spec value exceeds the field order");
    pt.push_back(Fq::from_index(ctx->base, *slots[s2]));
  }
  return pt;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json witness_json(const cover::CoverWitness& w) {
  return json{{"v", w.v}, {"w", w.w}, {"k", w.k}};
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations in tensor products of prime-degree symbol algebras"};
  app.require_subcommand(1);

  // shared option storage; only options attached to the chosen subcommand
  // are ever populated
  std::uint64_t p = 3, ell = 3, samples = 0, seed = 0, fuel = kDefaultFuel;
  std::uint64_t set_budget = cover::kDefaultSetBudget;
  std::size_t term_budget = kDefaultTermBudget;
  unsigned n = 1, m = 1, r = 1, d = 2;
  std::string ctx_path, space_path, set_path, a_path, b_path, elems_path;
  std::string target, degrees, mode = "power", spec;

  auto* cov = app.add_subcommand("cover", "covering bounds over F_p^n");
  auto* cov_lines = cov->add_subcommand("lines", "lines through the origin");
  cov_lines->add_option("--p", p)->required();
  cov_lines->add_option("--n", n)->required();
  auto* cov_rep = cov->add_subcommand("represent", "write a target as kv+(p-1-k)w");
  cov_rep->add_option("--p", p)->required();
  cov_rep->add_option("--n", n)->required();
  cov_rep->add_option("--set", set_path)->required();
  cov_rep->add_option("--target", target)->required();
  auto* cov_verify = cov->add_subcommand("verify", "check the covering bound");
  cov_verify->add_option("--p", p)->required();
  cov_verify->add_option("--n", n)->required();
  cov_verify->add_option("--samples", samples);
  cov_verify->add_option("--seed", seed);
  cov_verify->add_option("--budget", set_budget);
  auto* cov_sharp = cov->add_subcommand("sharp", "find a bound-size set with an uncovered target");
  cov_sharp->add_option("--p", p)->required();
  cov_sharp->add_option("--n", n)->required();
  cov_sharp->add_option("--budget", set_budget);

  auto* alg = app.add_subcommand("algebra", "element arithmetic");
  auto* alg_mul = alg->add_subcommand("mul", "multiply two elements");
  alg_mul->add_option("--ctx", ctx_path)->required();
  alg_mul->add_option("--a", a_path)->required();
  alg_mul->add_option("--b", b_path)->required();
  auto* alg_trace = alg->add_subcommand("trace", "reduced trace of an element");
  alg_trace->add_option("--ctx", ctx_path)->required();
  alg_trace->add_option("--a", a_path)->required();
  auto* alg_star = alg->add_subcommand("star", "symmetrized star product");
  alg_star->add_option("--ctx", ctx_path)->required();
  alg_star->add_option("--elems", elems_path)->required();
  alg_star->add_option("--degrees", degrees)->required();
  alg_star->add_option("--term-budget", term_budget);

  auto* spc = app.add_subcommand("space", "subspace checks");
  auto* spc_dim = spc->add_subcommand("dim", "rank of the generating set");
  spc_dim->add_option("--ctx", ctx_path)->required();
  spc_dim->add_option("--space", space_path)->required();
  auto* spc_check = spc->add_subcommand("check", "trace-power or Kummer condition");
  spc_check->add_option("--ctx", ctx_path)->required();
  spc_check->add_option("--space", space_path)->required();
  spc_check->add_option("--mode", mode)->check(CLI::IsMember({"power", "kummer"}));
  spc_check->add_option("--r", r)->required();
  spc_check->add_option("--seed", seed);
  spc_check->add_option("--term-budget", term_budget);
  auto* spc_refute = spc->add_subcommand("refute", "dimension-bound refutation certificate");
  spc_refute->add_option("--ctx", ctx_path)->required();
  spc_refute->add_option("--space", space_path)->required();
  spc_refute->add_option("--fuel", fuel);
  spc_refute->add_option("--term-budget", term_budget);

  auto* ex = app.add_subcommand("examples", "named example spaces");
  auto* ex_max = ex->add_subcommand("max-space", "the maximal trace-vanishing space");
  ex_max->add_option("--p", p)->required();
  ex_max->add_option("--m", m)->required();
  ex_max->add_option("--ell", ell)->required();
  ex->add_subcommand("tr-square", "the degree-3 space separating the two conditions");

  auto* frm = app.add_subcommand("form", "trace quadratic form");
  auto* frm_gram = frm->add_subcommand("gram", "Gram matrix determinant");
  frm_gram->add_option("--ctx", ctx_path)->required();
  auto* frm_ortho = frm->add_subcommand("orthobasis", "orthonormal basis of the split form");
  frm_ortho->add_option("--d", d)->required();
  frm_ortho->add_option("--ell", ell)->required();
  auto* frm_tri = frm->add_subcommand("triangular", "strictly upper triangular counterexample");
  frm_tri->add_option("--d", d)->required();
  frm_tri->add_option("--r", r)->required();
  frm_tri->add_option("--ell", ell);

  auto* orc = app.add_subcommand("oracle", "matrix-representation cross-checks");
  auto* orc_cmp = orc->add_subcommand("compare", "algebra traces vs matrix oracle");
  orc_cmp->add_option("--ctx", ctx_path)->required();
  orc_cmp->add_option("--space", space_path)->required();
  orc_cmp->add_option("--spec", spec)->required();

  try {
    std::vector<const char*> argv = {"symbalg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cov_lines->parsed()) {
      auto lines = cover::lines_through(p, cover::Pt(n, 0));
      json jl = json::array();
      for (const auto& ln : lines)
        jl.push_back(json{{"dir", ln.dir}, {"points", ln.points}});
      emit(out, json{{"p", p}, {"n", n}, {"count", lines.size()}, {"lines", jl}});
      err << lines.size() << " lines\n";
      return 0;
    }
    if (cov_rep->parsed()) {
      auto S = load_json(set_path).get<std::vector<cover::Pt>>();
      auto Q = parse_csv_ints(target);
      auto w = cover::represent(p, Q, S);
      if (w) {
        emit(out, json{{"covered", true}, {"witness", witness_json(*w)}});
        err << "covered\n";
        return 0;
      }
      emit(out, json{{"covered", false}});
      err << "not covered\n";
      return 1;
    }
    if (cov_verify->parsed()) {
      std::optional<std::pair<std::uint64_t, std::uint64_t>> sampled;
      if (samples > 0) sampled = std::make_pair(samples, seed);
      auto rep = cover::verify_bound(p, n, sampled, set_budget);
      json j{{"p", rep.p},
             {"n", rep.n},
             {"bound", rep.bound},
             {"sets_checked", rep.sets_checked},
             {"exhaustive", rep.exhaustive},
             {"passed", rep.passed},
             {"degenerate_p2", rep.degenerate_p2}};
      if (rep.failure)
        j["failure"] = json{{"set", rep.failure->first},
                            {"uncovered", rep.failure->second}};
      emit(out, j);
      err << (rep.passed ? "bound holds on " : "bound FAILED after ")
          << rep.sets_checked << " sets\n";
      return rep.passed ? 0 : 1;
    }
    if (cov_sharp->parsed()) {
      auto sharp = cover::find_sharp(p, n, set_budget);
      if (sharp) {
        emit(out, json{{"found", true},
                       {"set", sharp->set},
                       {"uncovered", sharp->uncovered}});
        err << "sharpness witness found\n";
        return 0;
      }
      emit(out, json{{"found", false}});
      err << "no sharpness witness within budget\n";
      return 1;
    }

    if (alg_mul->parsed() || alg_trace->parsed() || alg_star->parsed()) {
      CtxPtr ctx = ctx_from_json(load_json(ctx_path));
      if (alg_mul->parsed()) {
        Element a = element_from_json(load_json(a_path), ctx);
        Element b = element_from_json(load_json(b_path), ctx);
        emit(out, to_json(a * b));
      } else if (alg_trace->parsed()) {
        Element a = element_from_json(load_json(a_path), ctx);
        emit(out, to_json(trace(a)));
      } else {
        std::vector<Element> vs;
        for (const auto& je : load_json(elems_path))
          vs.push_back(element_from_json(je, ctx));
        auto ds_int = parse_csv_ints(degrees);
        std::vector<unsigned> ds;
        for (int v : ds_int) {
          if (v < 0) throw InvalidInput("degrees must be nonnegative");
          ds.push_back(static_cast<unsigned>(v));
        }
        emit(out, to_json(star(vs, ds, term_budget)));
      }
      return 0;
    }

    if (spc_dim->parsed() || spc_check->parsed() || spc_refute->parsed()) {
      CtxPtr ctx = ctx_from_json(load_json(ctx_path));
      Subspace V = subspace_from_json(load_json(space_path), ctx);
      if (spc_dim->parsed()) {
        emit(out, json{{"dim", rank_of_elements(V.gens)},
                       {"gens", V.gens.size()}});
        return 0;
      }
      if (spc_check->parsed()) {
        CheckReport rep = mode == "power"
                              ? trace_power_check(V, r, 32, seed, term_budget)
                              : kummer_check(V, r, 32, seed, term_budget);
        emit(out, to_json(rep));
        err << (rep.passed ? "passed" : "violated") << " at r=" << r << "\n";
        return rep.passed ? 0 : 1;
      }
      auto outcome = refute_space(V, fuel, term_budget);
      json j{{"within_bound", outcome.within_bound},
             {"bound", outcome.bound},
             {"dim", outcome.dim}};
      if (outcome.cert) {
        if (!validate_certificate(outcome))
          throw InternalContradiction("emitted certificate failed revalidation");
        j["certificate"] = to_json(*outcome.cert);
      }
      emit(out, j);
      err << (outcome.within_bound ? "within bound" : "refuted") << "\n";
      return outcome.within_bound ? 0 : 1;
    }

    if (ex_max->parsed()) {
      CtxPtr ctx = make_ctx(p, m, Variant::RootOfUnity, make_field(ell));
      Subspace V = gallery::max_space(ctx);
      emit(out, json{{"ctx", to_json(*ctx)}, {"space", to_json(V)}});
      err << "dim " << V.gens.size() << "\n";
      return 0;
    }
    if (ex->parsed() && ex->get_subcommand("tr-square")->parsed()) {
      CtxPtr ctx = make_ctx(3, 1, Variant::ArtinSchreier, make_field(3, 2));
      Subspace V = gallery::example_p3(ctx);
      const Element& g = V.gens.back();
      emit(out, json{{"ctx", to_json(*ctx)},
                     {"space", to_json(V)},
                     {"trace", to_json(trace(g))},
                     {"trace_square", to_json(trace(power(g, 2)))},
                     {"power_check", to_json(trace_power_check(V, 2))},
                     {"kummer_check", to_json(kummer_check(V, 2))}});
      err << "power check passes, Kummer fails at degree 1\n";
      return 0;
    }

    if (frm_gram->parsed()) {
      CtxPtr ctx = ctx_from_json(load_json(ctx_path));
      PolyMatrix G = gram_trace_form(ctx);
      CoeffPoly det = det_fraction_free(G);
      emit(out, json{{"size", G.rows},
                     {"det", to_json(det)},
                     {"nonsingular", !det.is_zero()}});
      err << (det.is_zero() ? "SINGULAR" : "nonsingular") << "\n";
      return det.is_zero() ? 1 : 0;
    }
    if (frm_ortho->parsed()) {
      auto res = orthonormal_split_basis(d, make_field(ell));
      json basis = json::array();
      for (const auto& M : res.basis) {
        json rows = json::array();
        for (const auto& v : M.data) rows.push_back(v.coeffs());
        basis.push_back(rows);
      }
      emit(out, json{{"d", d},
                     {"count", res.basis.size()},
                     {"gram_is_identity", res.gram_is_identity},
                     {"basis", basis}});
      return res.gram_is_identity ? 0 : 1;
    }
    if (frm_tri->parsed()) {
      auto rep = strict_upper_space(d, r, make_field(ell));
      emit(out, json{{"dim", rep.dim},
                     {"quotient", rep.quotient},
                     {"exceeds_quotient", rep.exceeds_quotient},
                     {"traces_vanish", rep.traces_vanish}});
      return rep.traces_vanish ? 0 : 1;
    }

    if (orc_cmp->parsed()) {
      CtxPtr ctx = ctx_from_json(load_json(ctx_path));
      Subspace V = subspace_from_json(load_json(space_path), ctx);
      auto pt = parse_spec_point(spec, ctx);
      MatRep rep = split_symbol(ctx, pt);
      unsigned kmax = static_cast<unsigned>(
          std::min(ctx->p - 1, ctx->base->ell - 1));
      json elems = json::array();
      bool all = true;
      for (const auto& g : V.gens) {
        Fq alg_tr = rep.embed(trace(g).specialize(pt));
        FqMatrix M = represent_element(rep, g);
        bool tr_ok = alg_tr == M.trace();
        std::vector<Fq> psums;
        for (unsigned k2 = 1; k2 <= kmax; ++k2)
          psums.push_back(rep.embed(trace(power(g, k2)).specialize(pt)));
        auto fk = newton_coeffs(psums, rep.field->ell);
        auto cp = charpoly_division_free(M);
        bool nt_ok = true;
        for (unsigned k2 = 0; k2 < kmax; ++k2)
          if (fk[k2] != cp[k2]) nt_ok = false;
        all = all && tr_ok && nt_ok;
        elems.push_back(json{{"trace_match", tr_ok}, {"newton_match", nt_ok}});
      }
      emit(out, json{{"k_max", kmax}, {"elements", elems}, {"all_match", all}});
      err << (all ? "oracle agrees" : "oracle DISAGREES") << "\n";
      return all ? 0 : 1;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const FuelExhausted& e) {
    err << "fuel exhausted: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symbalg
