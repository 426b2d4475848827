#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coinv/codes.hpp"
#include "coinv/delta.hpp"
#include "coinv/graded.hpp"
#include "coinv/ideal.hpp"
#include "coinv/io.hpp"
#include "coinv/verify.hpp"

#ifndef COINV_GOLDEN_DIR
#define COINV_GOLDEN_DIR ""
#endif

namespace {

using coinv::InjectiveTableau;
using coinv::OrderedSetPartition;
using coinv::Partition;
using coinv::SparsePolynomial;
using nlohmann::ordered_json;

struct OutOpts {
  std::string format = "text";
  std::string path;
};

void add_out_opts(CLI::App* cmd, OutOpts& o) {
  cmd->add_option("--out", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", o.path, "write to this file instead of stdout");
}

// Owns either std::cout or an output file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
    } else {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
      os_ = &file_;
    }
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

Partition parse_shape_for(int n, const std::string& text) {
  Partition shape = Partition::parse(text);
  if (shape.weight() > n)
    throw std::invalid_argument("shape weight " + std::to_string(shape.weight()) +
                                " exceeds n = " + std::to_string(n));
  return shape;
}

ordered_json osp_report_json(const OrderedSetPartition& osp) {
  ordered_json j;
  j["n"] = osp.n();
  j["shape"] = osp.shape().to_string();
  j["blocks"] = osp.to_string();
  j["code"] = osp.code();
  j["maxcode"] = osp.maxcode();
  j["coinv"] = osp.coinv();
  j["tableau"] = osp.tableau().to_string();
  return j;
}

void write_osp_report(std::ostream& os, const OrderedSetPartition& osp,
                      const std::string& format) {
  if (format == "json") {
    os << osp_report_json(osp).dump(2) << "\n";
  } else if (format == "csv") {
    os << "blocks,code,maxcode,coinv,tableau\n";
    os << csv_quote(osp.to_string()) << "," << csv_quote(coinv::join_ints(osp.code())) << ","
       << csv_quote(coinv::join_ints(osp.maxcode())) << "," << osp.coinv() << ","
       << csv_quote(osp.tableau().to_string()) << "\n";
  } else {
    os << "blocks: " << osp.to_string() << "\n";
    os << "code: " << coinv::join_ints(osp.code()) << "\n";
    os << "maxcode: " << coinv::join_ints(osp.maxcode()) << "\n";
    os << "coinv: " << osp.coinv() << "\n";
    os << "tableau: " << osp.tableau().to_string() << "\n";
  }
}

void write_enumerate_row(std::ostream& os, const OrderedSetPartition& osp,
                         const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["blocks"] = osp.to_string();
    j["code"] = osp.code();
    j["maxcode"] = osp.maxcode();
    j["coinv"] = osp.coinv();
    os << j.dump() << "\n";
  } else if (format == "csv") {
    os << csv_quote(osp.to_string()) << "," << csv_quote(coinv::join_ints(osp.code())) << ","
       << csv_quote(coinv::join_ints(osp.maxcode())) << "," << osp.coinv() << "\n";
  } else {
    os << osp.to_string() << "\t" << coinv::join_ints(osp.code()) << "\t"
       << coinv::join_ints(osp.maxcode()) << "\t" << osp.coinv() << "\n";
  }
}

int cmd_enumerate(int n, const std::string& shape_text, const std::string& blocks,
                  const OutOpts& out) {
  const Partition shape = parse_shape_for(n, shape_text);
  Sink sink(out.path);
  if (out.format == "csv") sink.os() << "blocks,code,maxcode,coinv\n";
  if (!blocks.empty()) {
    write_enumerate_row(sink.os(), OrderedSetPartition::parse(n, shape, blocks), out.format);
    return 0;
  }
  coinv::for_each_osp(n, shape, [&](const OrderedSetPartition& osp) {
    write_enumerate_row(sink.os(), osp, out.format);
  });
  return 0;
}

int cmd_code(int n, const std::string& shape_text, const std::string& blocks,
             const OutOpts& out) {
  const Partition shape = parse_shape_for(n, shape_text);
  const auto osp = OrderedSetPartition::parse(n, shape, blocks);
  Sink sink(out.path);
  write_osp_report(sink.os(), osp, out.format);
  return 0;
}

int cmd_insert(int n, const std::string& shape_text, const std::string& code_text,
               const OutOpts& out) {
  const Partition shape = parse_shape_for(n, shape_text);
  const std::vector<int> code = coinv::split_ints(code_text);
  const auto osp = coinv::insert_code(code, n, shape);  // throws when not a member
  Sink sink(out.path);
  write_osp_report(sink.os(), osp, out.format);
  return 0;
}

int cmd_hilbert(int n, const std::string& shape_text, bool cross_check, const OutOpts& out) {
  const Partition shape = parse_shape_for(n, shape_text);
  const coinv::GradedDimensionTable table = coinv::hilbert_by_elimination(n, shape);
  int code = 0;
  std::string cross = "";
  if (cross_check) {
    const std::vector<long> by_coinv = coinv::hilbert_by_coinv(n, shape);
    if (by_coinv == table.hilbert()) {
      cross = "pass";
    } else {
      cross = "fail";
      code = 1;
      std::cerr << "cross-check failed: coinv series " << coinv::join_ints(std::vector<int>(
                       by_coinv.begin(), by_coinv.end()))
                << " vs elimination series "
                << coinv::join_ints(
                       std::vector<int>(table.hilbert().begin(), table.hilbert().end()))
                << "\n";
    }
  }
  Sink sink(out.path);
  std::ostream& os = sink.os();
  if (out.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["shape"] = shape.to_string();
    ordered_json ambient = ordered_json::array(), ideal = ordered_json::array();
    for (const auto& a : table.ambient) ambient.push_back(a.get_str());
    for (const auto& a : table.ideal) ideal.push_back(a.get_str());
    j["ambient"] = ambient;
    j["ideal"] = ideal;
    j["quotient"] = table.quotient;
    j["hilbert"] = table.hilbert();
    j["total"] = table.quotient_total();
    if (cross_check) j["cross_check"] = cross;
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "degree,ambient,ideal,quotient\n";
    for (std::size_t d = 0; d < table.quotient.size(); ++d)
      os << d << "," << table.ambient[d].get_str() << "," << table.ideal[d].get_str() << ","
         << table.quotient[d] << "\n";
  } else {
    os << "degree\tambient\tideal\tquotient\n";
    for (std::size_t d = 0; d < table.quotient.size(); ++d)
      os << d << "\t" << table.ambient[d].get_str() << "\t" << table.ideal[d].get_str() << "\t"
         << table.quotient[d] << "\n";
    std::vector<long> h = table.hilbert();
    os << "hilbert: " << coinv::join_ints(std::vector<int>(h.begin(), h.end())) << "\n";
    os << "total: " << table.quotient_total() << "\n";
    if (cross_check) os << "cross-check: " << cross << "\n";
  }
  return code;
}

int cmd_delta(int n, const std::string& shape_text, const std::string& tableau_text,
              const std::string& blocks, const OutOpts& out) {
  const Partition shape = parse_shape_for(n, shape_text);
  const int s = shape.size();
  if (tableau_text.empty() == blocks.empty())
    throw std::invalid_argument("give exactly one of --tableau and --blocks");
  SparsePolynomial p(n);
  ordered_json source;
  if (!tableau_text.empty()) {
    const auto t = InjectiveTableau::parse(shape, tableau_text);
    p = coinv::delta_tableau(t, n, s);
    source["tableau"] = t.to_string();
  } else {
    const auto osp = OrderedSetPartition::parse(n, shape, blocks);
    p = coinv::delta_osp(osp);
    source["blocks"] = osp.to_string();
  }
  Sink sink(out.path);
  std::ostream& os = sink.os();
  if (out.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["s"] = s;
    j["source"] = source;
    j["degree"] = p.degree();
    j["leading_exponent"] = p.leading_monomial();
    j["polynomial"] = ordered_json::parse(coinv::polynomial_to_json(p));
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "coeff";
    for (int i = 1; i <= n; ++i) os << ",e" << i;
    os << "\n";
    for (const auto& [e, c] : p.terms()) {
      os << csv_quote(coinv::to_string(c));
      for (int v : e) os << "," << v;
      os << "\n";
    }
  } else {
    os << p.to_text() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const coinv::VerifyOptions& opts, const OutOpts& out) {
  const coinv::VerificationReport report = coinv::run_suite(suite, opts);
  Sink sink(out.path);
  std::ostream& os = sink.os();
  if (out.format == "json") {
    ordered_json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass();
    j["failures"] = report.failures();
    j["truncated"] = report.truncated;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json row;
      row["name"] = c.name;
      row["params"] = c.params;
      row["pass"] = c.pass;
      row["counterexample"] = c.counterexample;
      checks.push_back(row);
    }
    j["checks"] = checks;
    j["wall_ms"] = report.wall_ms;
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "name,params,pass,counterexample\n";
    for (const auto& c : report.checks)
      os << csv_quote(c.name) << "," << csv_quote(c.params) << "," << (c.pass ? 1 : 0) << ","
         << csv_quote(c.counterexample) << "\n";
  } else {
    const bool color = out.path.empty() && isatty(fileno(stdout)) && !std::getenv("NO_COLOR");
    const char* green = color ? "\x1b[32m" : "";
    const char* red = color ? "\x1b[31m" : "";
    const char* reset = color ? "\x1b[0m" : "";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const auto& c = report.checks[i];
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.1f", report.wall_ms[i]);
      if (c.pass) {
        os << green << "PASS" << reset << " " << c.name << " " << c.params << " (" << ms
           << " ms)\n";
      } else {
        os << red << "FAIL" << reset << " " << c.name << " " << c.params << ": "
           << c.counterexample << "\n";
      }
    }
    os << "suite " << report.suite << ": " << (report.checks.size() - report.failures()) << "/"
       << report.checks.size() << " checks passed";
    if (report.truncated) os << " (truncated by budget)";
    os << "\n";
  }
  return report.pass() ? 0 : 1;
}

int cmd_power_ideal(int n, int k, int s, const OutOpts& out) {
  const coinv::PowerIdealComparison cmp = coinv::power_ideal_equality(n, k, s);
  const bool ok = cmp.all_equal && cmp.quotient_total == cmp.osp_count;
  Sink sink(out.path);
  std::ostream& os = sink.os();
  if (out.format == "json") {
    ordered_json j;
    j["n"] = cmp.n;
    j["k"] = cmp.k;
    j["s"] = cmp.s;
    j["shape"] = cmp.shape.to_string();
    ordered_json rows = ordered_json::array();
    for (const auto& d : cmp.degrees) {
      ordered_json row;
      row["degree"] = d.d;
      row["power_ideal"] = d.dim_power_ideal.get_str();
      row["shape_ideal"] = d.dim_shape_ideal.get_str();
      row["join"] = d.dim_join.get_str();
      row["equal"] = d.equal;
      rows.push_back(row);
    }
    j["degrees"] = rows;
    j["all_equal"] = cmp.all_equal;
    j["quotient_total"] = cmp.quotient_total;
    j["osp_count"] = cmp.osp_count;
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "degree,power_ideal,shape_ideal,join,equal\n";
    for (const auto& d : cmp.degrees)
      os << d.d << "," << d.dim_power_ideal.get_str() << "," << d.dim_shape_ideal.get_str()
         << "," << d.dim_join.get_str() << "," << (d.equal ? 1 : 0) << "\n";
  } else {
    os << "shape: " << cmp.shape.to_string() << "\n";
    os << "degree\tpower\tshape\tjoin\tequal\n";
    for (const auto& d : cmp.degrees)
      os << d.d << "\t" << d.dim_power_ideal.get_str() << "\t" << d.dim_shape_ideal.get_str()
         << "\t" << d.dim_join.get_str() << "\t" << (d.equal ? "yes" : "no") << "\n";
    os << "all equal: " << (cmp.all_equal ? "yes" : "no") << "\n";
    os << "quotient total: " << cmp.quotient_total << " osp count: " << cmp.osp_count << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coinversion combinatorics and harmonic bases for generalized "
               "coinvariant quotients"};
  app.require_subcommand(1);
  int exit_code = 0;

  struct {
    int n = 0;
    std::string shape, blocks;
    OutOpts out;
  } en;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "list ordered set partitions with code and maxcode");
  enumerate->add_option("-n,--n", en.n, "number of letters")->required();
  enumerate->add_option("--shape", en.shape, "comma-separated partition, e.g. 2,1,0")
      ->required();
  enumerate->add_option("--blocks", en.blocks, "restrict to one ordered set partition");
  add_out_opts(enumerate, en.out);
  enumerate->callback([&] { exit_code = cmd_enumerate(en.n, en.shape, en.blocks, en.out); });

  struct {
    int n = 0;
    std::string shape, blocks;
    OutOpts out;
  } co;
  auto* code = app.add_subcommand("code", "code, maxcode, coinv, and tableau of one "
                                          "ordered set partition");
  code->add_option("-n,--n", co.n, "number of letters")->required();
  code->add_option("--shape", co.shape, "comma-separated partition")->required();
  code->add_option("--blocks", co.blocks, "blocks, e.g. 1,3|2|")->required();
  add_out_opts(code, co.out);
  code->callback([&] { exit_code = cmd_code(co.n, co.shape, co.blocks, co.out); });

  struct {
    int n = 0;
    std::string shape, code_text;
    OutOpts out;
  } in;
  auto* insert = app.add_subcommand("insert", "rebuild the ordered set partition with a "
                                              "given code");
  insert->add_option("-n,--n", in.n, "number of letters")->required();
  insert->add_option("--shape", in.shape, "comma-separated partition")->required();
  insert->add_option("--code", in.code_text, "comma-separated code")->required();
  add_out_opts(insert, in.out);
  insert->callback([&] { exit_code = cmd_insert(in.n, in.shape, in.code_text, in.out); });

  struct {
    int n = 0;
    std::string shape;
    bool cross_check = false;
    OutOpts out;
  } hi;
  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the quotient by "
                                                "exact elimination");
  hilbert->add_option("-n,--n", hi.n, "number of letters")->required();
  hilbert->add_option("--shape", hi.shape, "comma-separated partition")->required();
  hilbert->add_flag("--cross-check", hi.cross_check,
                    "also count ordered set partitions by coinv and compare");
  add_out_opts(hilbert, hi.out);
  hilbert->callback([&] { exit_code = cmd_hilbert(hi.n, hi.shape, hi.cross_check, hi.out); });

  struct {
    int n = 0;
    std::string shape, tableau, blocks;
    OutOpts out;
  } de;
  auto* delta = app.add_subcommand("delta", "harmonic polynomial of a tableau or an "
                                            "ordered set partition");
  delta->add_option("-n,--n", de.n, "number of letters")->required();
  delta->add_option("--shape", de.shape, "comma-separated partition")->required();
  delta->add_option("--tableau", de.tableau, "rows like 2,1,3|5,4,9|6");
  delta->add_option("--blocks", de.blocks, "blocks like 1,3|2|");
  add_out_opts(delta, de.out);
  delta->callback(
      [&] { exit_code = cmd_delta(de.n, de.shape, de.tableau, de.blocks, de.out); });

  struct {
    std::string suite = "all";
    coinv::VerifyOptions opts;
    OutOpts out;
  } ve;
  ve.opts.fixtures_dir = COINV_GOLDEN_DIR;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_choices = coinv::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", ve.suite, "suite name")
      ->check(CLI::IsMember(suite_choices))
      ->capture_default_str();
  verify->add_option("--max-n", ve.opts.max_n, "sweep bound on the number of letters")
      ->capture_default_str();
  verify->add_option("--max-s", ve.opts.max_s, "power bound for the power-ideal sweep (0 = max-n)")
      ->capture_default_str();
  verify->add_option("-n,--n", ve.opts.only_n, "restrict sweeps to a single n");
  verify->add_option("--shape", ve.opts.only_shape, "restrict sweeps to a single shape");
  verify->add_option("-k,--k", ve.opts.only_k, "restrict the power-ideal sweep to a single k");
  verify->add_option("-s,--s", ve.opts.only_s, "restrict the power-ideal sweep to a single s");
  verify->add_option("--budget", ve.opts.budget, "cap on checks per suite (0 = unlimited)")
      ->capture_default_str();
  verify->add_option("--trials", ve.opts.random_trials, "random trials for sampled checks")
      ->capture_default_str();
  verify->add_option("--seed", ve.opts.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--fixtures", ve.opts.fixtures_dir, "directory with the golden fixtures");
  add_out_opts(verify, ve.out);
  verify->callback([&] { exit_code = cmd_verify(ve.suite, ve.opts, ve.out); });

  struct {
    int n = 0, k = 0, s = 0;
    OutOpts out;
  } wi;
  auto* power_ideal = app.add_subcommand("power-ideal", "compare the power/elementary ideal with its "
                                              "shape ideal degree by degree");
  power_ideal->add_option("-n,--n", wi.n, "number of letters")->required();
  power_ideal->add_option("-k,--k", wi.k, "number of elementary generators")->required();
  power_ideal->add_option("-s,--s", wi.s, "variable power")->required();
  add_out_opts(power_ideal, wi.out);
  power_ideal->callback([&] { exit_code = cmd_power_ideal(wi.n, wi.k, wi.s, wi.out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return exit_code;
}
