#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jsums/numutil.hpp"
#include "jsums/verify.hpp"

namespace {

using jsums::ordered_json;

std::vector<std::uint32_t> parse_u32_list(const std::string& csv, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument(std::string("malformed ") + what);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

ordered_json value_json(const jsums::Embedding& E, const jsums::Cyclo& v) {
  const long long q = E.field().q();
  if (auto m = E.as_integer(v, -2 * q * q, 2 * q * q)) return ordered_json{{"integer", *m}};
  ordered_json o;
  o["residues"] = ordered_json::array();
  for (int i = 0; i < E.aux_count(); ++i) o["residues"].push_back(v.r[i]);
  o["mirror"] = {v.mirror.real(), v.mirror.imag()};
  return o;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
    os << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Jacobsthal sums, finite-field hypergeometric series and curve counts"};
  app.require_subcommand(1);

  // ---- field ----
  auto* cmd_field = app.add_subcommand("field", "inspect a finite field and its embedding data");
  std::uint32_t f_p = 0, f_e = 1;
  int f_aux = 2;
  cmd_field->add_option("--p", f_p, "characteristic (odd prime)")->required();
  cmd_field->add_option("--e", f_e, "extension degree");
  cmd_field->add_option("--aux-primes", f_aux, "number of auxiliary embedding primes (1..4)");

  // ---- sum ----
  auto* cmd_sum = app.add_subcommand("sum", "evaluate Jacobsthal-type character sums");
  std::uint32_t s_p = 0, s_e = 1;
  std::string s_kind, s_exps, s_args;
  cmd_sum->add_option("--p", s_p, "characteristic (odd prime)")->required();
  cmd_sum->add_option("--e", s_e, "extension degree");
  cmd_sum->add_option("--kind", s_kind, "phi_n | psi_n | gen_phi | gen_psi")->required();
  cmd_sum->add_option("--exps", s_exps, "comma-separated exponents")->required();
  cmd_sum->add_option("--args", s_args, "comma-separated shifts (element encodings)")->required();

  // ---- hyp ----
  auto* cmd_hyp = app.add_subcommand("hyp", "evaluate a finite-field hypergeometric series");
  std::uint32_t h_p = 0, h_e = 1, h_x = 0;
  int h_aux = 2;
  std::string h_upper, h_lower;
  cmd_hyp->add_option("--p", h_p, "characteristic (odd prime)")->required();
  cmd_hyp->add_option("--e", h_e, "extension degree");
  cmd_hyp->add_option("--upper", h_upper, "upper characters as comma-separated T-exponents")->required();
  cmd_hyp->add_option("--lower", h_lower, "lower characters as comma-separated T-exponents")->required();
  cmd_hyp->add_option("--x", h_x, "argument (element encoding)")->required();
  cmd_hyp->add_option("--aux-primes", h_aux, "number of auxiliary embedding primes (1..4)");

  // ---- count ----
  auto* cmd_count = app.add_subcommand("count", "count points on y^2 = f(x)");
  std::uint32_t c_p = 0, c_e = 1, c_m = 1, c_d = 3, c_a = 0, c_b = 0, c_c = 0;
  std::string c_curve, c_poly;
  cmd_count->add_option("--p", c_p, "characteristic (odd prime)")->required();
  cmd_count->add_option("--e", c_e, "extension degree");
  cmd_count->add_option("--curve", c_curve, "em | emprime | trinomial | general")->required();
  cmd_count->add_option("--m", c_m, "power parameter for em/emprime");
  cmd_count->add_option("--d", c_d, "degree for trinomial");
  cmd_count->add_option("--a", c_a, "curve parameter a");
  cmd_count->add_option("--b", c_b, "curve parameter b");
  cmd_count->add_option("--c", c_c, "curve parameter c");
  cmd_count->add_option("--poly", c_poly, "coefficients of f, constant first (general)");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run statement checkers over a field sweep");
  std::string v_checks, v_out, v_format = "json";
  std::uint32_t v_qmin = 5, v_qmax = 49, v_samples = 500;
  std::uint64_t v_seed = 0;
  int v_aux = 2, v_threads = 1;
  cmd_verify->add_option("--checks", v_checks, "comma-separated check names (default: all)");
  cmd_verify->add_option("--q-min", v_qmin, "smallest field size");
  cmd_verify->add_option("--q-max", v_qmax, "largest field size");
  cmd_verify->add_option("--samples", v_samples, "samples per group when not exhaustive");
  cmd_verify->add_option("--seed", v_seed, "sampling seed");
  cmd_verify->add_option("--aux-primes", v_aux, "number of auxiliary embedding primes (1..4)");
  cmd_verify->add_option("--out", v_out, "write the report to a file instead of stdout");
  cmd_verify->add_option("--format", v_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd_verify->add_option("--threads", v_threads, "worker threads (output is order-normalized)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_field) {
      const jsums::Field f = jsums::Field::build(f_p, f_e);
      const jsums::Embedding E(f, f_aux);
      ordered_json o;
      o["p"] = f.p();
      o["e"] = f.e();
      o["q"] = f.q();
      o["modulus"] = f.spec().modulus;
      o["generator"] = f.generator();
      o["n"] = f.n();
      o["aux_primes"] = ordered_json::array();
      for (int i = 0; i < E.aux_count(); ++i) o["aux_primes"].push_back(E.aux_prime(i));
      std::cout << o.dump(2) << '\n';
      return 0;
    }

    if (*cmd_sum) {
      const jsums::Field f = jsums::Field::build(s_p, s_e);
      const auto exps = parse_u32_list(s_exps, "--exps");
      const auto args = parse_u32_list(s_args, "--args");
      long long value = 0;
      if (s_kind == "phi_n" || s_kind == "psi_n") {
        if (exps.size() != 1 || args.size() != 1) {
          throw std::invalid_argument(s_kind + " takes one exponent and one shift");
        }
        value = s_kind == "phi_n" ? jsums::jacobsthal_phi_int(f, exps[0], args[0])
                                  : jsums::jacobsthal_psi_int(f, exps[0], args[0]);
      } else if (s_kind == "gen_psi") {
        value = jsums::gen_psi_int(f, exps, args);
      } else if (s_kind == "gen_phi") {
        value = jsums::gen_phi_int(f, exps, args);
      } else {
        throw std::invalid_argument("unknown --kind: " + s_kind);
      }
      std::cout << ordered_json{{"integer", value}}.dump(2) << '\n';
      return 0;
    }

    if (*cmd_hyp) {
      const jsums::Field f = jsums::Field::build(h_p, h_e);
      const jsums::Embedding E(f, h_aux);
      const jsums::BinomTable bt(E);
      auto to_chars = [&](const std::string& csv, const char* what) {
        std::vector<jsums::Character> cs;
        for (std::uint32_t j : parse_u32_list(csv, what)) {
          cs.push_back(jsums::Character{j % f.n()});
        }
        return cs;
      };
      const auto upper = to_chars(h_upper, "--upper");
      const auto lower = to_chars(h_lower, "--lower");
      const jsums::Cyclo v = jsums::fpq(bt, upper, lower, h_x);
      ordered_json o;
      o["upper"] = parse_u32_list(h_upper, "--upper");
      o["lower"] = parse_u32_list(h_lower, "--lower");
      o["x"] = h_x;
      o["value"] = value_json(E, v);
      if (upper.size() == 2 && lower.size() == 1) {
        o["integral_value"] = value_json(E, jsums::f21_integral(E, upper[0], upper[1], lower[0], h_x));
      }
      std::cout << o.dump(2) << '\n';
      return 0;
    }

    if (*cmd_count) {
      const jsums::Field f = jsums::Field::build(c_p, c_e);
      const jsums::Embedding E(f, 2);
      ordered_json o;
      o["curve"] = c_curve;
      if (c_curve == "em" || c_curve == "emprime") {
        const bool prime_family = c_curve == "emprime";
        const auto poly = jsums::shifted_power_product_poly(f, c_m, {c_a, c_b, c_c}, prime_family);
        o["m"] = c_m;
        o["a"] = c_a;
        o["b"] = c_b;
        o["c"] = c_c;
        o["direct"] = jsums::count_direct(f, poly);
        o["charsum"] = jsums::count_charsum(E, poly);
        const jsums::BinomTable bt(E);
        jsums::F21PhiTwistCache cache(bt);
        const jsums::FamilyHypCount fc =
            prime_family ? jsums::count_EmPrime_hyp(bt, &cache, c_m, c_a, c_b, c_c)
                         : jsums::count_Em_hyp(bt, &cache, c_m, c_a, c_b, c_c);
        o["closed_parity"] = fc.count_parity();
        o["closed_statement"] = fc.count_statement();
      } else if (c_curve == "trinomial") {
        std::vector<std::uint32_t> poly(c_d + 1, 0);
        if (c_d < 2) throw std::invalid_argument("--d must be at least 2");
        poly[0] = c_b;
        poly[c_d - 1] = c_a;
        poly[c_d] = 1;
        o["d"] = c_d;
        o["a"] = c_a;
        o["b"] = c_b;
        o["direct"] = jsums::count_direct(f, poly);
        o["charsum"] = jsums::count_charsum(E, poly);
        o["direct_affine"] = jsums::count_direct(f, poly) - jsums::r_of(poly);
        const jsums::BinomTable bt(E);
        o["closed_affine"] = value_json(E, jsums::count_trinomial_hyp(bt, c_d, c_a, c_b));
      } else if (c_curve == "general") {
        const auto poly = parse_u32_list(c_poly, "--poly");
        o["poly"] = poly;
        o["direct"] = jsums::count_direct(f, poly);
        o["charsum"] = jsums::count_charsum(E, poly);
      } else {
        throw std::invalid_argument("unknown --curve: " + c_curve);
      }
      std::cout << o.dump(2) << '\n';
      return 0;
    }

    if (*cmd_verify) {
      std::vector<jsums::CheckId> ids;
      if (v_checks.empty()) {
        ids = jsums::all_checks();
      } else {
        std::stringstream ss(v_checks);
        std::string name;
        while (std::getline(ss, name, ',')) {
          const auto id = jsums::check_from_name(name);
          if (!id) throw std::invalid_argument("unknown check: " + name);
          ids.push_back(*id);
        }
      }
      jsums::Sampling sampling;
      sampling.samples = v_samples;
      sampling.seed = v_seed;
      const auto reports = jsums::sweep(ids, v_qmin, v_qmax, sampling, v_aux, v_threads);

      std::string text;
      if (v_format == "csv") {
        text = jsums::summary_csv(reports);
      } else if (v_format == "text") {
        text = jsums::summary_text(reports);
      } else {
        ordered_json top;
        top["tool"] = "jsums verify";
        ordered_json inv;
        inv["checks"] = ordered_json::array();
        for (const auto id : ids) inv["checks"].push_back(jsums::check_name(id));
        inv["q_min"] = v_qmin;
        inv["q_max"] = v_qmax;
        inv["samples"] = v_samples;
        inv["seed"] = v_seed;
        inv["aux_primes"] = v_aux;
        top["invocation"] = inv;
        top["reports"] = jsums::reports_to_json(reports);
        ordered_json sm;
        sm["reports"] = reports.size();
        long long pass = 0, fail = 0, unmet = 0, vac = 0;
        for (const auto& r : reports) {
          if (r.status == "pass") ++pass;
          else if (r.status == "fail") ++fail;
          else if (r.status == "hypothesis_unmet") ++unmet;
          else ++vac;
        }
        sm["pass"] = pass;
        sm["fail"] = fail;
        sm["hypothesis_unmet"] = unmet;
        sm["vacuous"] = vac;
        top["summary"] = sm;
        text = top.dump(2) + "\n";
      }
      emit(text, v_out);
      return 0;
    }
  } catch (const jsums::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
