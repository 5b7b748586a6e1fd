// Command-line front end: evaluate operations on family files, emit
// generator families, and run the blow-up / order / bounds / selftest
// experiment drivers. Exit codes: 0 success, 1 failed assertion or check,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "famdd/experiments.hpp"
#include "famdd/explicit_family.hpp"
#include "famdd/family_ops.hpp"
#include "famdd/generators.hpp"
#include "famdd/kernel.hpp"
#include "famdd/oracle.hpp"

namespace {

using namespace famdd;

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

OpKind parse_op(const std::string& name) {
  auto op = op_from_name(name);
  if (!op) throw std::invalid_argument("unknown operation: " + name);
  return *op;
}

void write_family_file(const Family& fam, const std::string& path, std::uint64_t max_sets) {
  to_explicit(fam, max_sets).write_text_file(path);
}

// Empty path means stdout; the status line then moves to stderr so the
// family text stays pipeable.
void emit_family(const Family& fam, const std::string& path, std::uint64_t max_sets,
                 const std::string& status) {
  if (path.empty()) {
    to_explicit(fam, max_sets).write_text(std::cout);
    std::cerr << status << " -> stdout\n";
  } else {
    write_family_file(fam, path, max_sets);
    std::cout << status << " -> " << path << "\n";
  }
}

void write_dot_file(const Family& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << export_dot(fam);
}

int cmd_eval(const std::string& op_name_s, const std::string& f_path, const std::string& g_path,
             const std::string& out_path, const std::string& dot_path, const std::string& y_csv,
             const std::string& yp_csv, std::uint64_t max_sets) {
  OpKind op = parse_op(op_name_s);
  ExplicitFamily ef = ExplicitFamily::parse_text_file(f_path);
  DiagramManager mgr(Semantics::zdd, VariableOrder(ef.universe()));
  Family f = from_explicit(mgr, ef);

  Family result(mgr, bot_ref);
  if (op == OpKind::condition) {
    result = condition(f, split_names(y_csv), split_names(yp_csv));
  } else if (op_is_binary(op)) {
    if (g_path.empty()) throw std::invalid_argument("--g is required for a binary operation");
    ExplicitFamily eg = ExplicitFamily::parse_text_file(g_path);
    if (eg.universe() != ef.universe())
      throw std::invalid_argument("operand files declare different element lists");
    result = apply_binary(op, f, from_explicit(mgr, eg));
  } else {
    result = apply_unary(op, f);
  }

  if (!dot_path.empty()) write_dot_file(result, dot_path);
  std::ostringstream status;
  status << op_name(op) << ": " << count_sets(result) << " sets, " << node_count(result)
         << " nodes";
  emit_family(result, out_path, max_sets, status.str());
  return 0;
}

int cmd_gen(const std::string& family_s, const std::string& instance_s, std::size_t m,
            std::size_t k, std::size_t l, const std::string& out_path,
            const std::string& dot_path, std::uint64_t max_sets) {
  if (family_s.empty() == instance_s.empty())
    throw std::invalid_argument("pass exactly one of --family or --instance");
  if (!family_s.empty()) {
    auto kind = base_family_from_name(family_s);
    if (!kind) throw std::invalid_argument("unknown family kind: " + family_s);
    DiagramManager mgr(Semantics::zdd, VariableOrder(universe_for_family(*kind, m)));
    Family fam = gen_base_family(mgr, *kind, m, k, l);
    if (!dot_path.empty()) write_dot_file(fam, dot_path);
    std::ostringstream status;
    status << family_s << " m=" << m << ": " << count_sets(fam) << " sets, "
           << node_count(fam) << " nodes";
    emit_family(fam, out_path, max_sets, status.str());
    return 0;
  }
  if (out_path.empty())
    throw std::invalid_argument("--instance writes several files, so --out is required");
  OpKind op = parse_op(instance_s);
  ScalingInstance inst = gen_scaling_instance(op, m, true);
  write_family_file(*inst.f, out_path + ".f.fam", max_sets);
  std::cout << "instance " << instance_s << " m=" << m << ": f -> " << out_path << ".f.fam";
  if (inst.g) {
    write_family_file(*inst.g, out_path + ".g.fam", max_sets);
    std::cout << ", g -> " << out_path << ".g.fam";
  }
  if (inst.expected) {
    write_family_file(*inst.expected, out_path + ".expected.fam", max_sets);
    std::cout << ", expected -> " << out_path << ".expected.fam";
  }
  if (!dot_path.empty()) write_dot_file(*inst.f, dot_path);
  std::cout << "\n";
  return 0;
}

int cmd_blowup(const std::string& op_s, std::size_t m_min, std::size_t m_max,
               const std::string& csv_path) {
  OpKind op = parse_op(op_s);
  std::vector<BlowupRecord> records = run_blowup(op, m_min, m_max);
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path);
  write_blowup_csv(out, records);
  for (const auto& r : records)
    std::cout << op_s << " m=" << r.m << ": z_f=" << r.z_f << " z_g=" << r.z_g
              << " z_out=" << r.z_out << " count=" << r.count_out << " (" << r.elapsed_ms
              << " ms)\n";
  GrowthVerdict v = check_growth(op, records);
  std::cout << "growth: " << (v.pass ? "pass" : "fail") << " (" << v.detail << ")\n";
  return v.pass ? 0 : 1;
}

int cmd_orders(const std::string& op_s, std::size_t m, bool exhaustive, std::size_t samples,
               std::uint64_t seed, const std::string& csv_path) {
  OpKind op = parse_op(op_s);
  OrderStudySummary s = run_order_study(op, m, exhaustive, samples, seed);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path);
    out << "op,m,order_id,z_out\n";
    for (const auto& r : s.records)
      out << op_name(r.op) << ',' << r.m << ',' << r.order_id << ',' << r.z_out << '\n';
  }
  std::cout << op_s << " m=" << m << ": " << s.records.size()
            << " orders, natural=" << s.natural_size << " min=" << s.min_size
            << " median=" << s.median_size << " max=" << s.max_size << "\n";
  return 0;
}

int cmd_bounds(std::size_t m_max) {
  BoundsReport report = verify_bounds(m_max);
  for (const auto& row : report.rows)
    if (!row.ok)
      std::cout << "VIOLATION " << row.family << " m=" << row.m << " k=" << row.k << ": size "
                << row.max_size << " > bound " << row.bound << "\n";
  std::cout << report.rows.size() << " bound checks, " << report.violations << " violations\n";
  return report.violations == 0 ? 0 : 1;
}

int cmd_selftest(std::size_t cases, std::uint64_t seed) {
  SelfTestReport report = run_selftest(cases, seed);
  std::size_t shown = 0;
  for (const auto& fail : report.failures) {
    if (++shown > 5) break;
    std::cout << "FAIL " << fail.detail << "\n";
  }
  std::cout << report.cases << " cases, " << report.failures.size() << " failures\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced decision-diagram toolkit for set-family algebra"};
  app.require_subcommand(1);
  int rc = 0;

  auto* eval = app.add_subcommand("eval", "apply one operation to family files");
  std::string eval_op, eval_f, eval_g, eval_out, eval_dot, eval_y, eval_yp;
  std::uint64_t eval_cap = default_set_cap;
  eval->add_option("--op", eval_op, "operation name")->required();
  eval->add_option("--f", eval_f, "first operand file")->required();
  eval->add_option("--g", eval_g, "second operand file (binary ops)");
  eval->add_option("--out", eval_out, "result file (default: stdout)");
  eval->add_option("--dot", eval_dot, "also write the result as DOT");
  eval->add_option("--y", eval_y, "condition: required elements, comma separated");
  eval->add_option("--yprime", eval_yp, "condition: excluded elements, comma separated");
  eval->add_option("--max-sets", eval_cap, "enumeration cap for the result file");
  eval->callback([&] {
    rc = cmd_eval(eval_op, eval_f, eval_g, eval_out, eval_dot, eval_y, eval_yp, eval_cap);
  });

  auto* gen = app.add_subcommand("gen", "emit a generator family or scaling instance");
  std::string gen_family, gen_instance, gen_out, gen_dot;
  std::size_t gen_m = 2, gen_k = 0, gen_l = 0;
  std::uint64_t gen_cap = default_set_cap;
  gen->add_option("--family", gen_family, "base family kind");
  gen->add_option("--instance", gen_instance, "operation whose instance to emit");
  gen->add_option("--m", gen_m, "scale parameter")->required();
  gen->add_option("--k", gen_k, "slice size or line index, where applicable");
  gen->add_option("--l", gen_l, "seed column, where applicable");
  gen->add_option("--out", gen_out, "output file; families default to stdout, instances add .f/.g/.expected");
  gen->add_option("--dot", gen_dot, "also write DOT");
  gen->add_option("--max-sets", gen_cap, "enumeration cap for output files");
  gen->callback([&] {
    rc = cmd_gen(gen_family, gen_instance, gen_m, gen_k, gen_l, gen_out, gen_dot, gen_cap);
  });

  auto* blowup = app.add_subcommand("blowup", "size-growth sweep for one operation");
  std::string blow_op, blow_csv;
  std::size_t blow_min = 0, blow_max = 0;
  blowup->add_option("--op", blow_op, "operation name")->required();
  blowup->add_option("--mmin", blow_min, "smallest m")->required();
  blowup->add_option("--mmax", blow_max, "largest m")->required();
  blowup->add_option("--csv", blow_csv, "CSV output path")->required();
  blowup->callback([&] { rc = cmd_blowup(blow_op, blow_min, blow_max, blow_csv); });

  auto* orders = app.add_subcommand("orders", "variable-order study of an operation output");
  std::string ord_op, ord_csv;
  std::size_t ord_m = 3, ord_samples = 100;
  std::uint64_t ord_seed = 1;
  bool ord_exhaustive = false;
  orders->add_option("--op", ord_op, "operation name")->required();
  orders->add_option("--m", ord_m, "scale parameter")->required();
  orders->add_flag("--exhaustive", ord_exhaustive, "walk every order (universe <= 8)");
  orders->add_option("--samples", ord_samples, "number of sampled orders");
  orders->add_option("--seed", ord_seed, "base seed for sampled orders");
  orders->add_option("--csv", ord_csv, "optional per-order CSV output");
  orders->callback(
      [&] { rc = cmd_orders(ord_op, ord_m, ord_exhaustive, ord_samples, ord_seed, ord_csv); });

  auto* bounds = app.add_subcommand("bounds", "verify the generator size bounds");
  std::size_t bounds_m = 8;
  bounds->add_option("--mmax", bounds_m, "largest m to check")->required();
  bounds->callback([&] { rc = cmd_bounds(bounds_m); });

  auto* selftest = app.add_subcommand("selftest", "randomized oracle-equivalence suite");
  std::size_t st_cases = 100;
  std::uint64_t st_seed = 1;
  selftest->add_option("--cases", st_cases, "cases per operation");
  selftest->add_option("--seed", st_seed, "base seed");
  selftest->callback([&] { rc = cmd_selftest(st_cases, st_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
