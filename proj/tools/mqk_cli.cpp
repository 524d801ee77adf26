// Command-line driver: formal group law summaries, split-quadric
// multiplication tables, diagonal decompositions, divided-difference
// operators, and the bundled verification sweeps.
//
// Exit codes: 0 every requested check passed, 1 at least one check failed,
// 2 unusable configuration. Set MQK_SEED to fix the randomized-check seed.

#include <cctype>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mqk/verify.hpp"

namespace {

using namespace mqk;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

std::uint64_t env_seed() {
  const char* s = std::getenv("MQK_SEED");
  if (s == nullptr || *s == '\0') return 0;
  errno = 0;
  char* end = nullptr;
  const unsigned long long val = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0')
    fail(Errc::bad_argument, "MQK_SEED must be a decimal integer");
  return val;
}

std::string lower(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return t;
}

// series_str emits one term per line; reports want single-line values.
std::string one_line(const std::string& multi) {
  std::string out;
  size_t pos = 0;
  while (pos <= multi.size()) {
    const size_t nl = multi.find('\n', pos);
    const std::string line =
        multi.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    if (!line.empty()) {
      if (out.empty())
        out = line;
      else if (line[0] == '-')
        out += " - " + line.substr(1);
      else
        out += " + " + line;
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out.empty() ? "0" : out;
}

struct TheoryChoice {
  bool additive = false;
  bool multiplicative = false;
  int n = 0;  // height, when >= 2
};

TheoryChoice parse_theory(const std::string& s) {
  const std::string t = lower(s);
  TheoryChoice out;
  if (t == "chow" || t == "additive") {
    out.additive = true;
    return out;
  }
  if (t == "k0" || t == "multiplicative") {
    out.multiplicative = true;
    return out;
  }
  if (t.size() >= 2 && t[0] == 'k' && t.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int n = std::atoi(t.c_str() + 1);
    if (n >= 2 && n <= 5) {
      out.n = n;
      return out;
    }
  }
  fail(Errc::bad_argument,
       "unknown theory '" + s + "' (use chow, additive, k0, multiplicative, or k2..k5)");
}

Base parse_coeff(const std::string& s) {
  const std::string t = lower(s);
  if (t == "f2") return Base::F2;
  if (t == "z2" || t == "z(2)" || t == "zloc2") return Base::Zloc2;
  if (t == "q") return Base::Q;
  if (t == "z") return Base::Z;
  fail(Errc::bad_argument, "unknown coefficient ring '" + s + "' (use f2, z2, q, or z)");
}

// Native construction; apply with_coefficients afterwards for a base change.
FormalGroupLaw build_law(const TheoryChoice& tc, int trunc) {
  if (tc.additive) return mk_additive(trunc);
  if (tc.multiplicative) return mk_multiplicative(true, trunc);
  return mk_morava(MoravaSpec{tc.n, Base::Zloc2, true}, trunc);
}

std::vector<int> parse_int_list(const std::string& s, int lo, int hi, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    char* end = nullptr;
    const long val = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0' || val < lo || val > hi)
      fail(Errc::bad_argument, what + " must be a comma list of integers in [" +
                                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
    out.push_back(static_cast<int>(val));
  }
  if (out.empty()) fail(Errc::bad_argument, what + " must be non-empty");
  return out;
}

int finish(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << render_json(rep);
  else
    std::cout << render_text(rep);
  return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// fgl: print the law, its doubling series, and the projective-space classes,
// then check the axioms (plus integrality and the mod-2 doubling form at
// height n).

int cmd_fgl(const std::string& law_s, const std::string& coeff_s, int trunc_opt,
            const std::string& format) {
  const TheoryChoice tc = parse_theory(law_s);
  const int trunc = trunc_opt > 0 ? trunc_opt : (tc.n >= 2 ? (1 << tc.n) + 4 : 8);
  require(trunc >= 2 && trunc <= 32, Errc::bad_argument, "--trunc must be in [2, 32]");
  FormalGroupLaw law = build_law(tc, trunc);
  if (!coeff_s.empty()) law = with_coefficients(law, parse_coeff(coeff_s));

  Report rep;
  rep.config_kv("command", "fgl");
  rep.config_kv("law", law.name);
  rep.config_kv("ring", law.ring.name());
  rep.config_kv("trunc", std::to_string(law.trunc));
  rep.config_kv("F(x1, x2)", one_line(series_str(law.F)));
  rep.config_kv("doubling-series", one_line(series_str(two_series(law))));
  if (law.log) {
    const int imax = std::min(law.trunc - 1, 7);
    const std::vector<GradedScalar> cls = mishchenko_classes(law, imax);
    for (int i = 0; i <= imax; ++i)
      rep.config_kv("[P^" + std::to_string(i) + "]", scalar_str(cls[static_cast<size_t>(i)]));
  }

  const std::string tag = "fgl/" + law.name + "/" + law.ring.name() + "/";
  const FglAxiomReport ax = check_fgl_axioms(law);
  rep.add(tag + "unital", ax.unital);
  rep.add(tag + "commutative", ax.commutative);
  rep.add(tag + "associative", ax.associative);
  if (tc.n >= 2) {
    bool integral = true;
    std::string wit;
    for (const auto& [e, c] : law.F.terms)
      for (const auto& [vexp, coeff] : c.terms)
        if (vexp < 0 || !base_value_ok(Base::Zloc2, coeff)) {
          integral = false;
          wit = monomial_str(e) + ": " + scalar_str(c);
        }
    rep.add(tag + "coefficients-integral", integral, wit);

    // Up to degree 2^{2n} the mod-2 doubling series is the single term
    // v * t^{2^n}; cap the comparison accordingly.
    const FormalGroupLaw mod2 =
        law.ring.base == Base::F2 ? law : with_coefficients(law, Base::F2);
    const int cap = std::min(mod2.trunc, (1 << tc.n) * (1 << tc.n));
    const TruncSeries two = truncate(two_series(mod2), cap);
    TruncSeries expect = TruncSeries::zero(mod2.ring, 1, cap);
    if (cap > (1 << tc.n))
      expect.add_term(Exps{1 << tc.n}, GradedScalar::v_power(mod2.ring, 1));
    rep.add(tag + "doubling-series-mod-2", two == expect, one_line(series_str(two)));
  }
  return finish(rep, format);
}

// ---------------------------------------------------------------------------
// quadric-table: normal forms, the multiplication ladder, and point-degree
// rows for one cell, then the full per-cell check set.

int cmd_table(const std::string& theory_s, const std::string& coeff_s, int D, int trunc_opt,
              const std::string& format) {
  const TheoryChoice tc = parse_theory(theory_s);
  require(D >= 1 && D <= 20, Errc::bad_argument, "--dim must be in [1, 20]");
  const int trunc =
      trunc_opt > 0 ? trunc_opt : std::max(D + 2, tc.n >= 2 ? (1 << tc.n) + 4 : 0);
  require(trunc >= D + 2, Errc::bad_argument, "--trunc must be at least dim + 2");
  require(trunc <= 40, Errc::bad_argument, "--trunc must be at most 40");
  FormalGroupLaw law = build_law(tc, trunc);
  if (!coeff_s.empty()) law = with_coefficients(law, parse_coeff(coeff_s));
  const TheoryPtr th = make_quadric_theory(D, law);
  const int d = th->d;

  Report rep;
  rep.config_kv("command", "quadric-table");
  rep.config_kv("theory", law.name);
  rep.config_kv("ring", law.ring.name());
  rep.config_kv("D", std::to_string(D));
  rep.config_kv("d", std::to_string(d));
  rep.config_kv("trunc", std::to_string(law.trunc));
  std::string basis;
  for (int i = 0; i < th->basis_size(); ++i) {
    if (i) basis += ", ";
    basis += th->basis_name(i);
  }
  rep.config_kv("basis", basis);
  for (int k = d + 1; k <= D + 1; ++k)
    rep.config_kv("h^" + std::to_string(k), qc_str(qc_h_power(th, k)));
  for (int i = d; i >= 0; --i)
    rep.config_kv("h * l" + std::to_string(i), qc_str(qc_h_power(th, 1) * qc_l(th, i)));
  rep.config_kv("l" + std::to_string(d) + " * l" + std::to_string(d),
                qc_str(qc_l(th, d) * qc_l(th, d)));
  for (int k = 0; k <= D; ++k)
    rep.config_kv("deg(h^" + std::to_string(k) + ")",
                  scalar_str(pushforward_point(qc_h_power(th, k))));
  for (int i = 0; i <= d; ++i)
    rep.config_kv("deg(l" + std::to_string(i) + ")",
                  scalar_str(pushforward_point(qc_l(th, i))));

  checks_quadric_cell(rep, law, D);
  return finish(rep, format);
}

// ---------------------------------------------------------------------------
// decompose: the diagonal of one mod-2 invertible-v cell, its rank-one
// summand system, and the orthogonality checks.

int cmd_decompose(int n, int D, const std::string& coeff_s, int trunc_opt,
                  const std::string& format) {
  require(n >= 2 && n <= 5, Errc::bad_argument, "--n must be in [2, 5]");
  require(D >= 1 && D <= 30, Errc::bad_argument, "--dim must be in [1, 30]");
  if (!coeff_s.empty())
    require(parse_coeff(coeff_s) == Base::F2, Errc::bad_argument,
            "decompose requires --coeff f2 (the splitting lives mod 2)");
  const int trunc = trunc_opt > 0 ? trunc_opt : D + 2;
  require(trunc >= D + 2, Errc::bad_argument, "--trunc must be at least dim + 2");
  const FormalGroupLaw law = mk_morava(MoravaSpec{n, Base::F2, true}, trunc);
  const TheoryPtr th = make_quadric_theory(D, law);
  const int twon = 1 << n;
  const int Dp = D - twon + 1;

  Report rep;
  rep.config_kv("command", "decompose");
  rep.config_kv("n", std::to_string(n));
  rep.config_kv("ring", law.ring.name());
  rep.config_kv("D", std::to_string(D));
  rep.config_kv("d", std::to_string(th->d));
  rep.config_kv("Dprime", std::to_string(Dp));
  rep.config_kv("dprime", std::to_string(Dp - th->d));
  rep.config_kv("trunc", std::to_string(law.trunc));
  rep.config_kv("diagonal", corr_str(diagonal(th)));

  const std::vector<Correspondence> pis = tate_projectors_simplified(th);
  const VarpiSystem vs = varpi_projectors(th);
  const int period = twon - 1;
  for (size_t i = 0; i < pis.size(); ++i) {
    const Correspondence& p = pis[i];
    rep.config_kv("pi_" + std::to_string(i),
                  corr_str(p) + "  [rank " + std::to_string(summand_rank(p)) + ", twist " +
                      std::to_string(classify_tate(p)) + "]");
  }
  for (size_t k = 0; k < vs.varpi.size(); ++k) {
    const Correspondence& p = vs.varpi[k];
    rep.config_kv("varpi_" + std::to_string(vs.kept[k]),
                  corr_str(p) + "  [rank " + std::to_string(summand_rank(p)) + ", twist " +
                      std::to_string(classify_tate(p)) + "]");
  }
  for (int j : vs.dropped) rep.config_kv("varpi_" + std::to_string(j), "0 (dropped)");
  rep.config_kv("summands", std::to_string(pis.size() + vs.varpi.size()));

  checks_diagonal_cell(rep, th);
  return finish(rep, format);
}

// ---------------------------------------------------------------------------
// demazure: duality / operator-relation / characteristic-map certificates,
// or one explicit operator application via --word and --poly.

std::vector<int> parse_word(const std::string& s, int rank) {
  return parse_int_list(s, 1, rank, "--word entries");
}

int cmd_demazure(const std::string& type_s, int rank, std::string op, const std::string& word_s,
                 const std::string& poly_s, const std::string& law_s, int trunc,
                 const std::string& format) {
  const std::string ts = lower(type_s);
  LieType lt;
  if (ts == "b")
    lt = LieType::B;
  else if (ts == "d")
    lt = LieType::D;
  else
    fail(Errc::bad_argument, "--type must be B or D");
  const int min_rank = lt == LieType::B ? 2 : 4;
  require(rank >= min_rank && rank <= 6, Errc::bad_argument,
          std::string("--rank must be in [") + std::to_string(min_rank) + ", 6]");
  require(trunc >= 3 && trunc <= 12, Errc::bad_argument, "--trunc must be in [3, 12]");
  if (op.empty()) {
    if (!word_s.empty() && !poly_s.empty())
      op = "apply";
    else
      fail(Errc::bad_argument, "choose --op duality|braid|charmap|apply, or give --word and --poly");
  }

  const RootDatum rd = make_root_datum(lt, rank);
  const std::string group = std::string(lie_type_name(lt)) + std::to_string(rank);
  const std::string tag = "weyl/" + group + "/";
  std::mt19937_64 rng(env_seed());

  Report rep;
  rep.config_kv("command", "demazure");
  rep.config_kv("group", group);
  rep.config_kv("op", op);

  if (op == "duality") {
    require(rank <= 4, Errc::bad_argument, "--op duality enumerates the group; rank must be <= 4");
    const SignedPerm w0 = longest_element(rd);
    rep.config_kv("order", std::to_string(weyl_order(rd)));
    rep.config_kv("w0", sp_str(w0));
    rep.config_kv("l(w0)", std::to_string(length(rd, w0)));
    if (!word_s.empty()) {
      const std::vector<int> word = parse_word(word_s, rank);
      const SignedPerm w = apply_word(rd, word);
      rep.config_kv("w", sp_str(w));
      rep.config_kv("l(w)", std::to_string(length(rd, w)));
      rep.config_kv("dual-chain(X_w)", sc_str(dual_chain(rd, w, sc_class(rd, w))));
    }
    checks_schubert_duality(rep, rd, tag);
  } else if (op == "braid") {
    require(law_s.empty() || lower(law_s) == "additive" || lower(law_s) == "chow",
            Errc::bad_argument, "--op braid certifies the additive-law relations only");
    require(rank <= 4, Errc::bad_argument, "--op braid sweeps words; rank must be <= 4");
    rep.config_kv("law", "additive");
    checks_operator_relations(rep, rd, tag, rng);
  } else if (op == "charmap") {
    require(law_s.empty() || lower(law_s) == "additive" || lower(law_s) == "chow",
            Errc::bad_argument, "--op charmap requires the additive law");
    require(rank <= 4, Errc::bad_argument, "--op charmap enumerates lengths; rank must be <= 4");
    rep.config_kv("law", "additive");
    if (!poly_s.empty()) {
      BTContext ctx = make_bt_context(rd, mk_additive(trunc + 2), trunc);
      const TruncSeries u = parse_series(poly_s, ctx.fgl.ring, rank, trunc);
      rep.config_kv("u", one_line(series_str(u)));
      const SchubertComb cu = char_map_chow(ctx, u);
      rep.config_kv("c(u)", sc_str(cu));
      bool inter = true;
      std::string wit;
      for (int i = 1; i <= rank && inter; ++i)
        if (!(demazure_schubert(rd, i, cu) == char_map_chow(ctx, demazure_bt(ctx, i, u)))) {
          inter = false;
          wit = "i=" + std::to_string(i);
        }
      rep.add(tag + "charmap-intertwines", inter, wit);
    } else {
      checks_charmap_intertwines(rep, rd, tag, rng);
    }
  } else if (op == "apply") {
    require(!word_s.empty() && !poly_s.empty(), Errc::bad_argument,
            "--op apply needs --word and --poly");
    const std::vector<int> word = parse_word(word_s, rank);
    require(static_cast<int>(word.size()) < trunc, Errc::bad_argument,
            "--word longer than --trunc allows (each operator lowers the truncation)");
    const TheoryChoice tc = law_s.empty() ? parse_theory("additive") : parse_theory(law_s);
    const FormalGroupLaw law = build_law(tc, trunc + 2);
    BTContext ctx = make_bt_context(rd, law, trunc);
    const TruncSeries u = parse_series(poly_s, law.ring, rank, trunc);
    const TruncSeries result = demazure_word(ctx, word, u);
    std::string word_str;
    for (size_t k = 0; k < word.size(); ++k) {
      if (k) word_str += ",";
      word_str += std::to_string(word[k]);
    }
    const SignedPerm w = apply_word(rd, word);
    const bool reduced = is_reduced(rd, word);
    rep.config_kv("law", law.name);
    rep.config_kv("ring", law.ring.name());
    rep.config_kv("trunc", std::to_string(trunc));
    rep.config_kv("word", word_str);
    rep.config_kv("reduced", reduced ? "yes" : "no");
    rep.config_kv("w", sp_str(w));
    rep.config_kv("u", one_line(series_str(u)));
    rep.config_kv("Delta_word(u)", one_line(series_str(result)));
    if (!reduced)
      rep.add(tag + "non-reduced-word-annihilates", result.is_zero(),
              one_line(series_str(result)));
    else if (tc.additive)
      rep.add(tag + "reduced-word-independence",
              demazure_word(ctx, reduced_word(rd, w), u) == result);
  } else {
    fail(Errc::bad_argument, "--op must be duality, braid, charmap, or apply");
  }
  return finish(rep, format);
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& ns_s, int dmax,
               const std::string& format) {
  VerifyOptions opt;
  opt.ns = parse_int_list(ns_s, 2, 5, "--n");
  require(dmax >= 1 && dmax <= 16, Errc::bad_argument, "--dmax must be in [1, 16]");
  opt.dmax = dmax;
  opt.seed = env_seed();
  return finish(run_suite(suite, opt), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection calculator for split quadrics and signed Weyl groups"};
  app.require_subcommand(1);
  int rc = kExitPass;

  std::string fgl_law = "k2", fgl_coeff, fgl_format = "text";
  int fgl_trunc = 0;
  CLI::App* fgl = app.add_subcommand("fgl", "formal group law summary and axioms");
  fgl->add_option("--law", fgl_law, "chow | additive | k0 | multiplicative | k2..k5");
  fgl->add_option("--coeff", fgl_coeff, "f2 | z2 | q | z (default: the law's native base)");
  fgl->add_option("--trunc", fgl_trunc, "truncation override");
  fgl->add_option("--format", fgl_format)->check(CLI::IsMember({"text", "json"}));
  fgl->callback([&]() { rc = cmd_fgl(fgl_law, fgl_coeff, fgl_trunc, fgl_format); });

  std::string qt_theory, qt_coeff, qt_format = "text";
  int qt_dim = 0, qt_trunc = 0;
  CLI::App* qt = app.add_subcommand("quadric-table", "cell multiplication table and checks");
  qt->add_option("--theory", qt_theory, "chow | k0 | k2..k5")->required();
  qt->add_option("--coeff", qt_coeff, "f2 | z2 | q | z (default: the law's native base)");
  qt->add_option("--dim", qt_dim, "quadric dimension D >= 1")->required();
  qt->add_option("--trunc", qt_trunc, "truncation override (>= dim + 2)");
  qt->add_option("--format", qt_format)->check(CLI::IsMember({"text", "json"}));
  qt->callback([&]() { rc = cmd_table(qt_theory, qt_coeff, qt_dim, qt_trunc, qt_format); });

  std::string dc_coeff, dc_format = "text";
  int dc_n = 0, dc_dim = 0, dc_trunc = 0;
  CLI::App* dc = app.add_subcommand("decompose", "diagonal splitting into rank-one summands");
  dc->add_option("--n", dc_n, "height n >= 2")->required();
  dc->add_option("--dim", dc_dim, "quadric dimension D >= 1")->required();
  dc->add_option("--coeff", dc_coeff, "must be f2");
  dc->add_option("--trunc", dc_trunc, "truncation override (>= dim + 2)");
  dc->add_option("--format", dc_format)->check(CLI::IsMember({"text", "json"}));
  dc->callback([&]() { rc = cmd_decompose(dc_n, dc_dim, dc_coeff, dc_trunc, dc_format); });

  std::string dm_type = "B", dm_op, dm_word, dm_poly, dm_law, dm_format = "text";
  int dm_rank = 2, dm_trunc = 6;
  CLI::App* dm = app.add_subcommand("demazure", "divided-difference certificates and evaluation");
  dm->add_option("--type", dm_type, "B | D");
  dm->add_option("--rank", dm_rank, "group rank");
  dm->add_option("--op", dm_op, "duality | braid | charmap | apply");
  dm->add_option("--word", dm_word, "comma list of simple-reflection indices");
  dm->add_option("--poly", dm_poly, "input polynomial, e.g. \"x1^2 + 2*x1*x2\"");
  dm->add_option("--law", dm_law, "additive | k2..k5 (apply only; relations are additive)");
  dm->add_option("--trunc", dm_trunc, "working truncation");
  dm->add_option("--format", dm_format)->check(CLI::IsMember({"text", "json"}));
  dm->callback([&]() {
    rc = cmd_demazure(dm_type, dm_rank, dm_op, dm_word, dm_poly, dm_law, dm_trunc, dm_format);
  });

  std::string vf_suite = "all", vf_n = "2,3", vf_format = "text";
  int vf_dmax = 12;
  CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", vf_suite)->check(CLI::IsMember({"all", "fgl", "quadric", "motives", "weyl"}));
  vf->add_option("--n", vf_n, "comma list of heights, e.g. 2,3");
  vf->add_option("--dmax", vf_dmax, "largest quadric dimension in sweeps");
  vf->add_option("--format", vf_format)->check(CLI::IsMember({"text", "json"}));
  vf->callback([&]() { rc = cmd_verify(vf_suite, vf_n, vf_dmax, vf_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return rc;
}
