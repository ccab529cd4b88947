#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsimplex/bigint.hpp"
#include "hsimplex/branch_shift.hpp"
#include "hsimplex/chow.hpp"
#include "hsimplex/combinatorics.hpp"

namespace hsimplex {

/// Bad command-line parameters; the CLI maps it to exit code 2.
class UsageError : public InvalidParameters {
 public:
  using InvalidParameters::InvalidParameters;
};

enum class RecordKind { toric_h, chow_betti, coordinator, table_row, verify };
enum class Method { formula, recursion, rank, bfs };
enum class Format { text, csv, json };

std::string to_string(RecordKind kind);
RecordKind parse_record_kind(const std::string& s);
std::string to_string(Method method);
Method parse_method(const std::string& s);
Format parse_format(const std::string& s);

/// One result line of the command-line tool.
///
/// `method` is "formula" or "oracle". `extra` carries secondary sequences:
/// the Chow-Betti column of a table row, or S(0..K) of a BFS run.
struct OutputRecord {
  RecordKind kind = RecordKind::toric_h;
  int k = 0;
  int n = 0;
  std::optional<int> r;
  std::vector<BigInt> values;
  std::string method = "formula";
  bool ok = true;
  std::string label;
  std::map<std::string, std::vector<BigInt>> extra;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const nlohmann::json& j);
std::string csv_header();  // kind,k,n,r,method,values,status
std::string to_csv(const OutputRecord& rec);
std::string to_text(const OutputRecord& rec);
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

/// k > n/2 is replaced by n - k (Delta_{k,n} and Delta_{n-k,n} are isomorphic).
int normalize_k(int k, int n);

OutputRecord cmd_toric_h(int k, int n, Method method = Method::formula);
/// All codimensions 0..n-1 when r is empty. Exact ranks above n = 8 need `force`.
OutputRecord cmd_chow_betti(int k, int n, std::optional<int> r, Method method = Method::formula,
                            RankMode mode = RankMode::exact, std::uint32_t prime = kDefaultPrime,
                            bool force = false);
/// kmax < 0 selects n + 2.
OutputRecord cmd_coordinator(int n, Method method = Method::formula, int kmax = -1);

/// Rows (k, n) for 4 <= n <= max_n and 2 <= k <= n/2. A non-formula method
/// recomputes both columns from the face lattice and the balancing systems.
std::vector<OutputRecord> cmd_table(int max_n, Method method = Method::formula,
                                    RankMode mode = RankMode::exact, std::uint32_t prime = kDefaultPrime);
/// "k, n | h_0 ... h_{n-1} | b_0 ... b_{n-1}" lines.
std::string table_text(const std::vector<OutputRecord>& rows);

struct VerifyOptions {
  int max_n = 6;
  RankMode mode = RankMode::exact;
  std::uint32_t prime = kDefaultPrime;
  bool force = false;  // keep exact ranks above n = 8
  BranchShift shift;
};

struct CheckFamily {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // "r=3 k=2 n=6: formula 7, oracle 6"

  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<CheckFamily> families;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  std::vector<OutputRecord> records(int max_n) const;
};

/// Runs every cross-check family up to max_n (each family keeps its own size cap).
/// Progress lines go to `log` when given.
VerifyReport cmd_verify(const VerifyOptions& options, std::ostream* log = nullptr);

/// Parses "toric_first:+1" style fault specs into a BranchShift.
BranchShift parse_fault(const std::string& spec);

}  // namespace hsimplex
