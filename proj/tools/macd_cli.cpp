// Command-line interface for the partially-symmetric Macdonald toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "macd/verify.hpp"

using json = nlohmann::json;
using namespace macd;

namespace {

int degree_bound_default() {
  if (const char* env = std::getenv("MACD_DEGREE_BOUND")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

json vk_to_json(const VkElem& v) {
  json out = json::array();
  for (const auto& [key, c] : v.terms()) {
    json term;
    term["partition"] = key.first;
    term["y_exponents"] = key.second;
    term["coeff"] = c.str();
    out.push_back(term);
  }
  return out;
}

json xpoly_to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["exponents"] = e;
    term["coeff"] = c.str();
    out.push_back(term);
  }
  return out;
}

json report_to_json(const CaseReport& r) {
  json j;
  j["suite"] = r.suite;
  j["case"] = r.case_id;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ok"] = r.ok;
  j["ms"] = r.ms;
  return j;
}

void print_reports(const std::vector<CaseReport>& reports,
                   const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    std::cout << (r.ok ? "ok   " : "FAIL ") << r.suite << " | " << r.case_id
              << " | " << r.ms << " ms\n";
    if (!r.ok) {
      std::cout << "     lhs: " << r.lhs << "\n";
      std::cout << "     rhs: " << r.rhs << "\n";
    }
  }
  int failed = 0;
  for (const auto& r : reports) failed += r.ok ? 0 : 1;
  std::cout << reports.size() - failed << "/" << reports.size()
            << " cases passed\n";
}

FixedPointLabel parse_label(const std::string& mu, const std::string& w) {
  FixedPointLabel fp;
  fp.xi = parse_composition(mu);
  fp.w = parse_strip(w);
  if (!fp.valid()) throw MathError("invalid fixed-point label");
  return fp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partially-symmetric Macdonald polynomial toolkit"};
  app.require_subcommand(1);

  std::string lambda_s, gamma_s, comp_s, mu_s, w_s, word_s, basis_s = "H";
  std::string side = "all", format = "table", on_s = "htilde";
  int m_opt = -1, k_opt = 0, degree = degree_bound_default();
  int max_weight = 4, k_max = 3, jobs = 1;
  unsigned long seed = 20250809;

  auto add_index_opts = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", lambda_s, "partition, comma separated");
    cmd->add_option("--gamma", gamma_s, "composition, comma separated");
  };

  CLI::App* cmd_e = app.add_subcommand("e", "nonsymmetric Macdonald polynomial");
  cmd_e->add_option("--comp", comp_s, "composition")->required();
  cmd_e->add_option("--format", format);

  CLI::App* cmd_eval = app.add_subcommand("eval-check", "evaluation formula");
  cmd_eval->add_option("--comp", comp_s)->required();
  cmd_eval->add_option("--format", format);

  CLI::App* cmd_p = app.add_subcommand("p", "partially symmetric Macdonald polynomial");
  add_index_opts(cmd_p);
  cmd_p->add_option("--m", m_opt, "symmetric slots")->required();
  cmd_p->add_option("--format", format);

  CLI::App* cmd_j = app.add_subcommand("j", "integral form");
  add_index_opts(cmd_j);
  cmd_j->add_option("--m", m_opt)->required();
  cmd_j->add_option("--format", format);

  CLI::App* cmd_h = app.add_subcommand("htilde", "modified partially-symmetric function");
  add_index_opts(cmd_h);
  cmd_h->add_option("--k", k_opt, "number of y variables")->required();
  cmd_h->add_option("--degree", degree);

  CLI::App* cmd_apply = app.add_subcommand("apply", "apply an operator word");
  add_index_opts(cmd_apply);
  cmd_apply->add_option("--k", k_opt)->required();
  cmd_apply->add_option("--degree", degree);
  cmd_apply->add_option("--op", word_s, "comma separated word, rightmost acts first")->required();
  cmd_apply->add_option("--on", on_s, "htilde or j");

  CLI::App* cmd_geom = app.add_subcommand("geom", "geometric representation");
  cmd_geom->add_option("--start", mu_s, "label as mu;w")->required();
  cmd_geom->add_option("--word", word_s, "comma separated word, rightmost acts first")->required();
  cmd_geom->add_option("--basis", basis_s, "H or I");
  cmd_geom->add_option("--format", format);

  CLI::App* cmd_pieri = app.add_subcommand("pieri", "degree-one Pieri expansion");
  add_index_opts(cmd_pieri);
  cmd_pieri->add_option("--side", side, "closed|geom|oracle|all");
  cmd_pieri->add_option("--format", format);

  CLI::App* cmd_bij = app.add_subcommand("bijection", "fixed points vs split indices");
  cmd_bij->add_option("--mu", mu_s);
  cmd_bij->add_option("--w", w_s);
  add_index_opts(cmd_bij);

  CLI::App* cmd_verify = app.add_subcommand("verify", "verification suites");
  std::string suite = "all";
  cmd_verify->add_option("suite", suite,
                         "ti|e1|y2|pieri|oracle|normalization|props|worknotes|all");
  int max_size = 6;
  cmd_verify->add_option("--max-weight", max_weight);
  cmd_verify->add_option("--k-max", k_max);
  cmd_verify->add_option("--degree", degree);
  cmd_verify->add_option("--jobs", jobs);
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--format", format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_e->parsed()) {
      Composition nu = parse_composition(comp_s);
      if (nu.empty()) throw MathError("empty composition");
      XPoly e = compute_E(nu);
      if (format == "json")
        std::cout << xpoly_to_json(e).dump(2) << "\n";
      else
        std::cout << e.str() << "\n";
      return 0;
    }
    if (cmd_eval->parsed()) {
      Composition lam = parse_composition(comp_s);
      if (lam.empty()) throw MathError("empty composition");
      EvaluationReport r = evaluation_check(lam);
      if (format == "json") {
        json j;
        j["lhs"] = r.lhs.str();
        j["rhs"] = r.rhs.str();
        j["ok"] = r.equal;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "lhs: " << r.lhs.str() << "\nrhs: " << r.rhs.str()
                  << "\nverdict: " << (r.equal ? "equal" : "DIFFERENT") << "\n";
      }
      return r.equal ? 0 : 1;
    }
    if (cmd_p->parsed() || cmd_j->parsed()) {
      SplitIndex idx(parse_composition(lambda_s), parse_composition(gamma_s),
                     m_opt);
      int n = m_opt + idx.k();
      PartiallySymmetricPoly out =
          cmd_p->parsed() ? build_P(idx, n) : build_J(idx, n);
      if (format == "json")
        std::cout << xpoly_to_json(out.body).dump(2) << "\n";
      else
        std::cout << out.body.str() << "\n";
      return 0;
    }
    if (cmd_h->parsed()) {
      Composition gam = parse_composition(gamma_s);
      if (static_cast<int>(gam.size()) != k_opt)
        gam.resize(k_opt, 0);
      SplitIndex idx(parse_composition(lambda_s), gam, degree);
      VkElem h = build_Htilde(idx, degree);
      std::cout << vk_to_json(h).dump(2) << "\n";
      return 0;
    }
    if (cmd_apply->parsed()) {
      Composition gam = parse_composition(gamma_s);
      if (static_cast<int>(gam.size()) != k_opt) gam.resize(k_opt, 0);
      SplitIndex idx(parse_composition(lambda_s), gam, degree);
      VkElem cur = on_s == "j" ? build_J_vk(idx, degree)
                               : build_Htilde(idx, degree);
      // rightmost token acts first
      std::vector<std::string> tokens;
      std::istringstream is(word_s);
      std::string tok;
      while (std::getline(is, tok, ',')) tokens.push_back(tok);
      for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        const std::string& op = *it;
        if (op == "d+")
          cur = dplus_poly(cur);
        else if (op == "d-")
          cur = dminus_poly(cur);
        else if (op.size() >= 2 && op[0] == 'y')
          cur = sfY_apply(std::stoi(op.substr(1)), cur);
        else if (op.size() >= 2 && op[0] == 'T' && op.ends_with("inv"))
          cur = sfT_inverse_apply(std::stoi(op.substr(1)), cur);
        else if (op.size() >= 2 && op[0] == 'T')
          cur = sfT_apply(std::stoi(op.substr(1)), cur);
        else
          throw MathError("unknown operator token: " + op);
      }
      std::cout << vk_to_json(cur).dump(2) << "\n";
      return 0;
    }
    if (cmd_geom->parsed()) {
      std::size_t semi = mu_s.find(';');
      if (semi == std::string::npos)
        throw MathError("start label must be mu;w");
      FixedPointLabel start = parse_label(mu_s.substr(0, semi), mu_s.substr(semi + 1));
      FpVector cur = FpVector::single(start);
      bool h_basis = basis_s == "H" || basis_s == "h";
      if (h_basis) cur = from_h_basis(cur);
      std::vector<std::string> tokens;
      std::istringstream is(word_s);
      std::string tok;
      while (std::getline(is, tok, ',')) if (!tok.empty()) tokens.push_back(tok);
      for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        std::string op = *it;
        if (!op.empty() && op[0] == '-' && op != "d-") op = op.substr(1);
        if (op == "d+")
          cur = dplus_geom(cur);
        else if (op == "d-")
          cur = dminus_geom(cur);
        else if (op == "y2")
          cur = y2_geom(cur);
        else if (op.size() >= 2 && op[0] == 'T' && op.ends_with("inv"))
          cur = tgeom_apply(std::stoi(op.substr(1)), cur, true);
        else if (op.size() >= 2 && op[0] == 'T')
          cur = tgeom_apply(std::stoi(op.substr(1)), cur, false);
        else
          throw MathError("unknown operator token: " + op);
      }
      if (h_basis) cur = to_h_basis(cur);
      if (format == "json") {
        json arr = json::array();
        for (const auto& [label, c] : cur.terms()) {
          json term;
          term["xi"] = label.xi;
          json wj = json::array();
          for (const auto& b : label.w) wj.push_back({{"c", b.c}, {"r", b.r}});
          term["w"] = wj;
          term["coeff"] = c.str();
          arr.push_back(term);
        }
        std::cout << arr.dump(2) << "\n";
      } else
        std::cout << cur.str() << "\n";
      return 0;
    }
    if (cmd_pieri->parsed()) {
      SplitIndex src(parse_composition(lambda_s), parse_composition(gamma_s),
                     static_cast<int>(parse_composition(lambda_s).size()));
      int n = src.size() + src.k() + 2;
      json rows = json::array();
      bool all_match = true;
      for (const PieriDatum& d : enumerate_support(src, n)) {
        json row;
        row["target"] = {{"lambda", d.target.lambda},
                         {"gamma", d.target.gamma}};
        if (side == "closed" || side == "all" || side == "oracle")
          row["A"] = coefficient_A(d).str();
        if (side == "geom" || side == "all") {
          MatchReport m = match_check(d);
          row["C"] = m.C_closed.str();
          row["c_r"] = m.c_r_column;
          row["match"] = m.matched && m.c_r_consistent &&
                         m.C_closed == m.C_operator;
          all_match = all_match && row["match"].get<bool>();
        }
        rows.push_back(row);
      }
      if (side == "oracle" || side == "all") {
        for (const auto& [tgt, c] : brute_force_expand(src, n)) {
          bool found = false;
          for (auto& row : rows) {
            if (row["target"]["lambda"].get<Composition>() == tgt.lambda &&
                row["target"]["gamma"].get<Composition>() == tgt.gamma) {
              row["oracle"] = c.str();
              bool same = row.contains("A") && row["A"] == c.str();
              row["oracle_matches"] = same;
              all_match = all_match && same;
              found = true;
            }
          }
          if (!found) {
            all_match = false;
            rows.push_back({{"target",
                             {{"lambda", tgt.lambda}, {"gamma", tgt.gamma}}},
                            {"oracle", c.str()},
                            {"oracle_matches", false}});
          }
        }
      }
      if (format == "json")
        std::cout << rows.dump(2) << "\n";
      else
        for (const auto& row : rows) std::cout << row.dump() << "\n";
      return all_match ? 0 : 1;
    }
    if (cmd_bij->parsed()) {
      json out;
      if (!mu_s.empty()) {
        FixedPointLabel fp = parse_label(mu_s, w_s);
        SplitIndex idx = phi(fp);
        out["lambda"] = idx.lambda;
        out["gamma"] = idx.gamma;
      } else {
        SplitIndex idx(parse_composition(lambda_s), parse_composition(gamma_s),
                       static_cast<int>(parse_composition(lambda_s).size()));
        FixedPointLabel fp = phi_inverse(idx);
        out["mu"] = fp.xi;
        json wj = json::array();
        for (const auto& b : fp.w)
          wj.push_back("q^" + std::to_string(b.r) + "*t^" + std::to_string(b.c));
        out["w"] = wj;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) {
      VerifyOptions opt;
      opt.max_size = max_size;
      opt.k_max = k_max;
      opt.max_weight = max_weight;
      opt.pieri_k_max = std::min(k_max, 2);
      opt.degree_bound = degree;
      opt.jobs = jobs;
      opt.seed = seed;
      std::vector<CaseReport> reports;
      if (suite == "ti")
        reports = verify_ti(opt);
      else if (suite == "e1")
        reports = verify_e1(opt);
      else if (suite == "y2")
        reports = verify_y2(opt);
      else if (suite == "pieri")
        reports = verify_pieri(opt);
      else if (suite == "oracle")
        reports = verify_oracle(opt);
      else if (suite == "normalization")
        reports = verify_normalization(opt);
      else if (suite == "props")
        reports = verify_props(opt);
      else if (suite == "worknotes")
        reports = verify_worknotes(opt);
      else if (suite == "all")
        reports = verify_all(opt);
      else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      print_reports(reports, format);
      return all_ok(reports) ? 0 : 1;
    }
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
