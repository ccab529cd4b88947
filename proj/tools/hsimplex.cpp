// Command-line front end: toric h-vectors, Chow-Betti numbers, coordinator
// numbers, the comparison table and the verification sweep.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hsimplex/commands.hpp"
#include "hsimplex/face_lattice.hpp"

namespace {

struct Args {
  int k = 0;
  int n = 0;
  std::optional<int> r;
  std::string method;
  std::string mode = "exact";
  std::uint32_t prime = hsimplex::kDefaultPrime;
  int kmax = -1;
  std::string format = "text";
  bool force = false;
  int max_n = 0;
  std::string fault;
  bool dual = false;
};

void add_format(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_rank_options(CLI::App* cmd, Args& a) {
  cmd->add_option("--mode", a.mode, "Rank arithmetic")->check(CLI::IsMember({"exact", "modp"}));
  cmd->add_option("--prime", a.prime, "Prime for --mode modp")->check(CLI::Range(2u, 2147483647u));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hsimplex;
  CLI::App app{"Toric h-vectors and Chow-Betti numbers of hypersimplices, coordinator numbers of A_{n-1}*"};
  app.require_subcommand(1);
  Args a;

  auto* toric = app.add_subcommand("toric-h", "Toric h-vector of the dual hypersimplex");
  toric->add_option("--k", a.k, "Number of ones per vertex")->required();
  toric->add_option("--n", a.n, "Ambient dimension")->required();
  toric->add_option("--method", a.method, "formula|recursion")->default_str("formula");
  add_format(toric, a);

  auto* chow = app.add_subcommand("chow-betti", "Chow-Betti numbers of the hypersimplex normal fan");
  chow->add_option("--k", a.k, "Number of ones per vertex")->required();
  chow->add_option("--n", a.n, "Ambient dimension")->required();
  chow->add_option("--r", a.r, "Codimension (all codimensions when omitted)");
  chow->add_option("--method", a.method, "formula|rank")->default_str("formula");
  add_rank_options(chow, a);
  chow->add_flag("--force", a.force, "Allow exact ranks above n = 8");
  add_format(chow, a);

  auto* coord = app.add_subcommand("coordinator", "Coordinator numbers of the A_{n-1}* lattice");
  coord->add_option("--n", a.n, "Lattice rank plus one")->required();
  coord->add_option("--method", a.method, "formula|bfs")->default_str("formula");
  coord->add_option("--kmax", a.kmax, "BFS depth (default n+2)");
  add_format(coord, a);

  auto* table = app.add_subcommand("table", "Toric h-vectors and Chow-Betti numbers side by side");
  a.max_n = 10;
  table->add_option("--max-n", a.max_n, "Largest n")->default_str("10");
  table->add_option("--method", a.method, "formula|recursion|rank")->default_str("formula");
  add_rank_options(table, a);
  add_format(table, a);

  auto* verify = app.add_subcommand("verify", "Cross-check every closed formula against its oracle");
  verify->add_option("--max-n", a.max_n, "Largest n (default 6)");
  add_rank_options(verify, a);
  verify->add_flag("--force", a.force, "Keep exact ranks above n = 8");
  verify->add_option("--fault", a.fault, "Shift one formula branch boundary, e.g. toric_first:+1");
  add_format(verify, a);

  auto* poset = app.add_subcommand("poset", "Face lattice of the hypersimplex as JSON");
  poset->add_option("--k", a.k, "Number of ones per vertex")->required();
  poset->add_option("--n", a.n, "Ambient dimension")->required();
  poset->add_flag("--dual", a.dual, "Order-dual (face lattice of the dual hypersimplex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format format = parse_format(a.format);
    const RankMode mode = parse_rank_mode(a.mode);
    auto method = [&](Method fallback) { return a.method.empty() ? fallback : parse_method(a.method); };

    if (*toric) {
      const auto rec = cmd_toric_h(a.k, a.n, method(Method::formula));
      write_records(std::cout, {rec}, format);
      return rec.ok ? 0 : 1;
    }
    if (*chow) {
      const auto rec = cmd_chow_betti(a.k, a.n, a.r, method(Method::formula), mode, a.prime, a.force);
      write_records(std::cout, {rec}, format);
      return rec.ok ? 0 : 1;
    }
    if (*coord) {
      const auto rec = cmd_coordinator(a.n, method(Method::formula), a.kmax);
      write_records(std::cout, {rec}, format);
      return rec.ok ? 0 : 1;
    }
    if (*table) {
      const auto rows = cmd_table(a.max_n, method(Method::formula), mode, a.prime);
      if (format == Format::text)
        std::cout << table_text(rows);
      else
        write_records(std::cout, rows, format);
      for (const auto& row : rows)
        if (!row.ok) return 1;
      return 0;
    }
    if (*verify) {
      VerifyOptions opt;
      if (a.max_n > 0) opt.max_n = a.max_n;
      opt.mode = mode;
      opt.prime = a.prime;
      opt.force = a.force;
      if (!a.fault.empty()) opt.shift = parse_fault(a.fault);
      const auto report = cmd_verify(opt, format == Format::text ? &std::cout : &std::cerr);
      if (format != Format::text) write_records(std::cout, report.records(opt.max_n), format);
      return report.exit_code();
    }
    if (*poset) {
      if (a.n < 2 || a.n > 31 || a.k < 1 || a.k > a.n - 1) throw UsageError("need 1 <= k <= n-1, 2 <= n <= 31");
      auto L = hypersimplex_face_poset(a.k, a.n);
      if (a.dual) L = dualize(L);
      std::cout << L.to_json().dump() << '\n';
      return 0;
    }
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
