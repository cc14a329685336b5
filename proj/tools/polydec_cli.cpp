#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "polydec/mindec.hpp"
#include "polydec/oracle.hpp"
#include "polydec/taxonomy.hpp"
#include "polydec/textio.hpp"

using json = nlohmann::ordered_json;
using namespace polydec;

namespace {

json elem_json(const FieldElement& e) {
  if (e.field()->k() == 1) return e.coords()[0];
  json arr = json::array();
  for (uint32_t c : e.coords()) arr.push_back(c);
  return arr;
}

json poly_json(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(elem_json(c));
  return arr;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_file);
  require(os.good(), Errc::ParseError, "cannot open output file " + out_file);
  os << text;
}

struct CommonOpts {
  std::string field_spec;
  std::string poly_text;
  std::string mode = "auto";
  int reps = 3;
  uint64_t seed = 0;
  uint64_t budget = 1000000;
  bool json_out = false;
  std::string out_file;
};

CoprimeCheckConfig config_for(const CommonOpts& o, Field f, int n) {
  std::optional<CoprimeMode> mode;
  if (o.mode == "exact") mode = CoprimeMode::Exact;
  else if (o.mode == "randomized") mode = CoprimeMode::Randomized;
  else require(o.mode == "auto", Errc::ParseError, "mode must be exact, randomized or auto");
  return CoprimeCheckConfig::for_input(f, n, o.seed, o.reps, mode);
}

json decomposition_json(const Decomposition& d) {
  json item;
  item["g"] = poly_json(d.g);
  item["h"] = poly_json(d.h);
  item["phase"] = d.prov.phase == Phase::BAlpha ? "balpha" : "gamma";
  return item;
}

json tree_json(const std::vector<DecompositionNode>& nodes) {
  json arr = json::array();
  for (const auto& node : nodes) {
    json item = decomposition_json(node.dec);
    item["children"] = tree_json(node.children);
    arr.push_back(std::move(item));
  }
  return arr;
}

std::string dec_text(const Decomposition& d) {
  return "g = " + d.g.to_string() + "   h = " + d.h.to_string() + "   [" +
         (d.prov.phase == Phase::BAlpha ? "balpha" : "gamma") + "]";
}

int cmd_decompose(const CommonOpts& o, bool all) {
  Field f = parse_field(o.field_spec);
  UniPoly poly = parse_poly(o.poly_text, f);
  require(!poly.is_zero() && poly.degree() >= 2, Errc::DegreeTooSmall,
          "decompose needs deg >= 2");
  // arbitrary input is normalized first; decompositions map back through
  // the linear adjustment, so the reported pairs decompose the input itself
  auto [ell, fn] = normalize(poly);
  CoprimeCheckConfig cfg = config_for(o, f, fn.degree());
  auto decs = min_decompositions(fn, cfg);
  if (!(fn == poly)) {
    // f = ell^-1 o fn = (ell^-1 o g) o h for every decomposition of fn
    LinearPoly inv = ell.inverse();
    for (auto& d : decs) d.g = compose(inv.to_poly(), d.g);
  }

  std::ostringstream text;
  json out;
  out["f"] = poly_json(poly);
  out["field"] = f->spec_string();
  out["decompositions"] = json::array();
  for (const auto& d : decs) {
    out["decompositions"].push_back(decomposition_json(d));
    text << dec_text(d) << "\n";
  }
  if (decs.empty()) text << "indecomposable\n";
  if (all) {
    // the recursive tree refers to the normalized polynomial
    auto tree = all_decompositions(fn, cfg);
    if (!(fn == poly)) out["normalized"] = poly_json(fn);
    out["tree"] = tree_json(tree);
    text << "(see --json for the recursive tree)\n";
  }
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

int cmd_oracle(const CommonOpts& o) {
  Field f = parse_field(o.field_spec);
  UniPoly poly = parse_poly(o.poly_text, f);
  OracleOptions opt;
  opt.budget = o.budget;
  auto [ell, fn] = normalize(poly);
  auto comps = minimal_right_components(fn, opt);

  std::ostringstream text;
  json out;
  out["f"] = poly_json(poly);
  out["field"] = f->spec_string();
  out["decompositions"] = json::array();
  LinearPoly inv = ell.inverse();
  for (const auto& h : comps) {
    auto g = taylor_left_component(fn, h);
    UniPoly gg = fn == poly ? *g : compose(inv.to_poly(), *g);
    json item;
    item["g"] = poly_json(gg);
    item["h"] = poly_json(h);
    out["decompositions"].push_back(std::move(item));
    text << "g = " << gg.to_string() << "   h = " << h.to_string() << "\n";
  }
  if (comps.empty()) text << "indecomposable\n";
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

int cmd_factor_phi(const CommonOpts& o) {
  Field f = parse_field(o.field_spec);
  UniPoly poly = parse_poly(o.poly_text, f);
  Rng rng(o.seed);
  PhiFactorization fac = factor_phi(poly, rng);

  std::ostringstream text;
  json out;
  out["f"] = poly_json(poly);
  out["field"] = f->spec_string();
  out["s"] = fac.s;
  out["r"] = fac.r;
  out["factors"] = json::array();
  for (int i = 0; i < fac.r; ++i) {
    BiPoly factor = fac.factor_at(i, f);
    out["factors"].push_back(factor.to_string());
    text << factor.to_string() << "\n";
  }
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

int cmd_classify(const CommonOpts& o) {
  Field f = parse_field(o.field_spec);
  UniPoly poly = parse_poly(o.poly_text, f);
  OracleOptions opt;
  opt.budget = o.budget;
  TaxonomyReport rep = classify_p2(poly, opt);

  std::ostringstream text;
  json out;
  out["f"] = poly_json(poly);
  out["field"] = f->spec_string();
  out["case"] = rep.taxonomy_case == TaxonomyCase::I ? "I" : "II";
  out["w"] = elem_json(rep.w);
  out["m"] = rep.m;
  text << "case " << (rep.taxonomy_case == TaxonomyCase::I ? "I" : "II") << ", w = "
       << rep.w.to_string() << ", m = " << rep.m;
  if (rep.taxonomy_case == TaxonomyCase::I) {
    out["ell"] = rep.ell;
    text << ", ell = " << rep.ell;
    out["pairs"] = json::array();
    for (const auto& rec : rep.case1) {
      json pr;
      pr["a"] = elem_json(rec.a);
      pr["b"] = elem_json(rec.b);
      out["pairs"].push_back(std::move(pr));
    }
  } else {
    out["pairs"] = json::array();
    for (const auto& rec : rep.case2) {
      json pr;
      pr["r"] = rec.r;
      pr["a"] = elem_json(rec.a);
      pr["b"] = elem_json(rec.b);
      pr["q"] = poly_json(rec.q);
      pr["qtilde"] = poly_json(rec.qtilde);
      out["pairs"].push_back(std::move(pr));
    }
  }
  text << "\n";
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

int cmd_family(const CommonOpts& o, int eps, const std::string& u_text,
               const std::string& s_text, int ell) {
  Field f = parse_field(o.field_spec);
  auto parse_elem = [&](const std::string& t) {
    UniPoly p = parse_poly(t, f);
    require(p.is_constant(), Errc::ParseError, "expected a field element, got " + t);
    return p.coeff(0);
  };
  FamilyParams params;
  params.eps = eps;
  params.u = parse_elem(u_text);
  params.s = parse_elem(s_text);
  params.ell = ell;
  FamilyOutput fam = gen_case1_family(f, params);

  std::ostringstream text;
  json out;
  out["field"] = f->spec_string();
  out["f"] = poly_json(fam.f);
  out["decompositions"] = json::array();
  text << "f = " << fam.f.to_string() << "\n";
  for (const auto& dec : fam.decompositions) {
    json item;
    item["t"] = elem_json(dec.t);
    item["g"] = poly_json(dec.g);
    item["h"] = poly_json(dec.h);
    out["decompositions"].push_back(std::move(item));
    text << "t = " << dec.t.to_string() << "   g = " << dec.g.to_string()
         << "   h = " << dec.h.to_string() << "\n";
  }
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

int cmd_census(const CommonOpts& o, const std::string& mode, uint64_t samples) {
  Field f = parse_field(o.field_spec);
  OracleOptions opt;
  opt.budget = o.budget;
  CensusMode m = mode == "sample" ? CensusMode::Sample : CensusMode::Exhaustive;
  require(mode == "sample" || mode == "exhaustive", Errc::ParseError,
          "census mode must be exhaustive or sample");
  CensusResult res = census_p2(f, m, samples, o.seed, opt);

  std::ostringstream text;
  text << "f,n_decompositions,case,m,ell_or_r,parametrization_ok\n";
  for (const auto& row : res.rows) {
    std::string coeffs;
    for (const auto& c : row.f.coeffs()) {
      if (!coeffs.empty()) coeffs += " ";
      coeffs += c.to_string();
    }
    text << "\"" << coeffs << "\"," << row.n_decompositions << ","
         << (row.taxonomy_case == TaxonomyCase::I ? "I" : "II") << "," << row.m << ","
         << row.ell_or_r << "," << (row.parametrization_ok ? 1 : 0) << "\n";
  }
  text << "# composites=" << res.composites_seen << " distinct=" << res.distinct_f
       << " fprime_zero=" << res.derivative_zero << " classified=" << res.multi_collision
       << " case1=" << res.case1_count << " case2=" << res.case2_count << "\n";

  if (o.json_out) {
    json out;
    out["field"] = f->spec_string();
    out["composites"] = res.composites_seen;
    out["distinct"] = res.distinct_f;
    out["classified"] = res.multi_collision;
    out["case1"] = res.case1_count;
    out["case2"] = res.case2_count;
    out["rows"] = json::array();
    for (const auto& row : res.rows) {
      json r;
      r["f"] = poly_json(row.f);
      r["n_decompositions"] = row.n_decompositions;
      r["case"] = row.taxonomy_case == TaxonomyCase::I ? "I" : "II";
      r["m"] = row.m;
      r["ell_or_r"] = row.ell_or_r;
      r["parametrization_ok"] = row.parametrization_ok;
      out["rows"].push_back(std::move(r));
    }
    emit(out.dump(2) + "\n", o.out_file);
  } else {
    emit(text.str(), o.out_file);
  }
  return 0;
}

int cmd_blocks(const CommonOpts& o, const std::vector<std::string>& gens, int n,
               int point, int pair) {
  require(!gens.empty(), Errc::ParseError, "at least one generator is required");
  int size = n;
  for (const auto& g : gens)
    size = std::max(size, static_cast<int>(parse_cycles(g, 0).size()));
  PermGroup grp;
  grp.n = size;
  for (const auto& g : gens) grp.gens.push_back(parse_cycles(g, size));

  std::ostringstream text;
  json out;
  out["n"] = size;
  if (pair > 0) {
    Block b = atkinson_pair_block(grp, point - 1, pair - 1);
    out["block"] = json::array();
    for (int x : b.members) out["block"].push_back(x + 1);
    text << format_block_1based(b) << "\n";
  } else {
    auto blocks = minimal_blocks(grp, point - 1);
    out["blocks"] = json::array();
    for (const auto& b : blocks) {
      json arr = json::array();
      for (int x : b.members) arr.push_back(x + 1);
      out["blocks"].push_back(std::move(arr));
      text << format_block_1based(b) << "\n";
    }
  }
  emit(o.json_out ? out.dump(2) + "\n" : text.str(), o.out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal functional decompositions of polynomials over finite fields"};
  app.require_subcommand(1);

  CommonOpts o;
  bool all = false;
  int eps = 0, ell = 1, n = 0, point = 1, pair = 0;
  std::string u_text = "1", s_text = "1", census_mode = "exhaustive";
  uint64_t samples = 10000;
  std::vector<std::string> gens;

  auto add_common = [&](CLI::App* cmd, bool needs_poly) {
    cmd->add_option("--field", o.field_spec, "field spec: p, p^k or p^k/modulus")
        ->required();
    if (needs_poly) cmd->add_option("--poly", o.poly_text, "polynomial in x")->required();
    cmd->add_flag("--json", o.json_out, "JSON output");
    cmd->add_option("--out", o.out_file, "write output to a file");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--budget", o.budget, "enumeration budget");
  };

  auto* dec = app.add_subcommand("decompose", "all minimal decompositions");
  add_common(dec, true);
  dec->add_option("--mode", o.mode, "coprimality mode: exact, randomized or auto");
  dec->add_option("--reps", o.reps, "repetitions c of the randomized check (>= 3)");
  dec->add_flag("--all", all, "recurse into left components");

  auto* orc = app.add_subcommand("oracle", "brute-force minimal decompositions");
  add_common(orc, true);

  auto* fph = app.add_subcommand("factor-phi", "factor f(x) - f(y) over F(y)");
  add_common(fph, true);

  auto* cls = app.add_subcommand("classify", "degree-p^2 two-case classification");
  add_common(cls, true);

  auto* fam = app.add_subcommand("family", "parametrized family and its decompositions");
  add_common(fam, false);
  fam->add_option("--eps", eps, "epsilon, 0 or 1");
  fam->add_option("--u", u_text, "parameter u (nonzero)");
  fam->add_option("--s", s_text, "parameter s (nonzero)");
  fam->add_option("--ell", ell, "positive divisor of p - 1");

  auto* cen = app.add_subcommand("census", "classify all degree-p^2 collisions");
  add_common(cen, false);
  cen->add_option("--mode", census_mode, "exhaustive or sample");
  cen->add_option("--samples", samples, "composite count in sample mode");

  auto* blk = app.add_subcommand("blocks", "minimal blocks of a permutation group");
  blk->add_option("--gen", gens, "generator in cycle notation, repeatable")->required();
  blk->add_option("--n", n, "number of points (default: largest point used)");
  blk->add_option("--point", point, "1-based base point");
  blk->add_option("--pair", pair, "1-based second point for a single pair block");
  blk->add_flag("--json", o.json_out, "JSON output");
  blk->add_option("--out", o.out_file, "write output to a file");

  try {
    app.parse(argc, argv);
    if (dec->parsed()) return cmd_decompose(o, all);
    if (orc->parsed()) return cmd_oracle(o);
    if (fph->parsed()) return cmd_factor_phi(o);
    if (cls->parsed()) return cmd_classify(o);
    if (fam->parsed()) return cmd_family(o, eps, u_text, s_text, ell);
    if (cen->parsed()) return cmd_census(o, census_mode, samples);
    if (blk->parsed()) return cmd_blocks(o, gens, n, point, pair);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
