#include <algorithm>
#include <sstream>

#include "ulam/ball_lis.hpp"
#include "ulam/code_search.hpp"
#include "ulam/errors.hpp"
#include "ulam/ilp.hpp"

namespace ulam {

namespace {

TableCell construction_cell(const CodeParams &params) {
  TableCell cell;
  cell.n = params.n();
  cell.d = params.d();
  cell.method = "construction";
  const auto words = major_index_code(params.n());
  if (find_shared_subsequence(words, params))
    throw std::logic_error("major-index code is not a code");
  cell.value = static_cast<unsigned long>(words.size());
  cell.upper_bound = singleton_upper(params);
  if (cell.value != cell.upper_bound)
    throw std::logic_error("major-index code does not meet the Singleton bound");
  cell.status = TableCell::Status::proven;
  cell.singleton = SingletonVerdict::exists;
  return cell;
}

TableCell search_cell(const CodeParams &params, const TableOptions &options) {
  TableCell cell;
  cell.n = params.n();
  cell.d = params.d();
  cell.method = "search";
  const unsigned n = params.n();
  const bool full = options.long_run || n <= 6 || (n == 7 && params.d() >= 5);
  const Budget budget = full ? options.cell_budget : options.bounded_budget;

  const BigInt singleton = singleton_upper(params);
  SearchOptions search;
  if (options.with_ip) {
    const IpBound ip = ip_upper_bound(params, options.ip_budget);
    search.upper_bound = ip.value;
  }
  const SearchResult r = max_code_search(params, budget, search);
  cell.value = static_cast<unsigned long>(r.code.size());
  cell.nodes = r.nodes_explored;
  if (r.optimality == Optimality::proven_maximum) {
    cell.status = TableCell::Status::proven;
    cell.upper_bound = cell.value;
  } else {
    cell.status = TableCell::Status::lower_bound;
    cell.upper_bound = r.upper_bound_used;
  }
  if (cell.value == singleton)
    cell.singleton = SingletonVerdict::exists;
  else if (cell.upper_bound < singleton)
    cell.singleton = SingletonVerdict::does_not_exist;
  else
    cell.singleton = SingletonVerdict::unknown;
  return cell;
}

} // namespace

TableReport reproduce_tables(const TableOptions &options) {
  if (options.n_min < 2 || options.n_min > options.n_max)
    throw DomainError("need 2 <= n_min <= n_max");
  TableReport report;
  for (unsigned n = options.n_min; n <= options.n_max; ++n) {
    const unsigned d_hi = options.d_max == 0 ? n - 1 : std::min(options.d_max, n - 1);
    for (unsigned d = std::max(options.d_min, 2u); d <= d_hi; ++d) {
      const CodeParams params(n, d);
      if (n > kDefaultSearchLimit) {
        TableCell cell;
        cell.n = n;
        cell.d = d;
        cell.upper_bound = singleton_upper(params);
        cell.method = "skipped";
        report.cells.push_back(std::move(cell));
      } else if (d == 2) {
        report.cells.push_back(construction_cell(params));
      } else {
        report.cells.push_back(search_cell(params, options));
      }
    }
  }
  return report;
}

std::string format_size_cell(const TableCell &cell) {
  switch (cell.status) {
  case TableCell::Status::proven:
    return to_string(cell.value) + "=";
  case TableCell::Status::lower_bound:
    return to_string(cell.value) + "≥";
  case TableCell::Status::skipped:
    break;
  }
  return "?";
}

std::string format_verdict_cell(const TableCell &cell) { return to_string(cell.singleton); }

namespace {

// Display width, counting each UTF-8 code point once.
std::size_t width(const std::string &s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string &s, std::size_t w) { return std::string(w > width(s) ? w - width(s) : 0, ' ') + s; }

std::string grid(const TableReport &report, const std::string &title,
                 std::string (*format)(const TableCell &)) {
  unsigned n_lo = ~0u, n_hi = 0, d_lo = ~0u, d_hi = 0;
  for (const auto &c : report.cells) {
    n_lo = std::min(n_lo, c.n);
    n_hi = std::max(n_hi, c.n);
    d_lo = std::min(d_lo, c.d);
    d_hi = std::max(d_hi, c.d);
  }
  std::ostringstream out;
  out << title << '\n';
  if (report.cells.empty())
    return out.str();
  const std::size_t w = 8;
  out << pad("n\\d", 4);
  for (unsigned d = d_lo; d <= d_hi; ++d)
    out << pad(std::to_string(d), w);
  out << '\n';
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    out << pad(std::to_string(n), 4);
    for (unsigned d = d_lo; d <= d_hi; ++d) {
      const auto it = std::find_if(report.cells.begin(), report.cells.end(),
                                   [&](const TableCell &c) { return c.n == n && c.d == d; });
      out << pad(it == report.cells.end() ? "" : format(*it), w);
    }
    out << '\n';
  }
  return out.str();
}

const char *status_name(TableCell::Status s) {
  switch (s) {
  case TableCell::Status::proven:
    return "proven";
  case TableCell::Status::lower_bound:
    return "bounded";
  case TableCell::Status::skipped:
    break;
  }
  return "skipped";
}

} // namespace

std::string table_text(const TableReport &report) {
  return grid(report, "A(n,d)", format_size_cell) + '\n' +
         grid(report, "Singleton-optimal code exists", format_verdict_cell);
}

std::string table_csv(const TableReport &report) {
  std::ostringstream out;
  out << "n,d,status,value,upper_bound,cell,singleton_optimal,method,nodes\n";
  for (const auto &c : report.cells)
    out << c.n << ',' << c.d << ',' << status_name(c.status) << ',' << to_string(c.value) << ','
        << to_string(c.upper_bound) << ',' << format_size_cell(c) << ',' << to_string(c.singleton) << ','
        << c.method << ',' << c.nodes << '\n';
  return out.str();
}

} // namespace ulam
