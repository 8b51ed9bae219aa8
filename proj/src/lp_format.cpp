#include "ulam/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

constexpr std::size_t kWrapColumn = 78;

// Appends " + 3 x_1_2" style terms, wrapping long rows onto continuation lines.
void write_terms(std::ostringstream &out, std::size_t &column, const IlpModel &model,
                 const std::vector<Term> &terms) {
  bool first = true;
  for (const auto &t : terms) {
    std::string piece;
    BigInt mag = abs(t.coef);
    if (first)
      piece = sgn(t.coef) < 0 ? "-" : "";
    else
      piece = sgn(t.coef) < 0 ? " - " : " + ";
    if (mag != 1)
      piece += mag.get_str() + " ";
    piece += model.var_name(t.var);
    if (!first && column + piece.size() > kWrapColumn) {
      out << "\n  ";
      column = 2;
      if (piece.front() == ' ')
        piece.erase(0, 1);
    }
    out << piece;
    column += piece.size();
    first = false;
  }
  if (first) {
    out << "0 " << model.var_name(0);
    column += 4;
  }
}

void write_row(std::ostringstream &out, const IlpModel &model, const LinearRow &row, const char *relation) {
  std::string head = " " + row.name + ": ";
  out << head;
  std::size_t column = head.size();
  write_terms(out, column, model, row.terms);
  out << ' ' << relation << ' ' << row.rhs.get_str() << '\n';
}

} // namespace

std::string export_lp(const IlpModel &model) {
  std::ostringstream out;
  out << "\\ Permutation-code size bound under the Ulam metric\n";
  out << "\\ n = " << model.n << ", d = " << model.d << "\n";
  out << "Maximize\n";
  {
    out << " obj: ";
    std::size_t column = 6;
    write_terms(out, column, model, model.objective);
    out << '\n';
  }
  out << "Subject To\n";
  for (const auto &row : model.inequality_rows)
    write_row(out, model, row, "<=");
  for (const auto &row : model.equality_rows)
    write_row(out, model, row, "=");
  out << "Bounds\n";
  for (std::size_t v = 0; v < model.num_vars(); ++v) {
    if (!model.upper_bounds.empty() && model.upper_bounds[v])
      out << " 0 <= " << model.var_name(v) << " <= " << model.upper_bounds[v]->get_str() << '\n';
    else
      out << " " << model.var_name(v) << " >= 0\n";
  }
  out << "General\n";
  std::size_t column = 0;
  for (std::size_t v = 0; v < model.num_vars(); ++v) {
    const std::string name = model.var_name(v);
    if (column != 0 && column + 1 + name.size() > kWrapColumn) {
      out << '\n';
      column = 0;
    }
    out << ' ' << name;
    column += 1 + name.size();
  }
  out << "\nEnd\n";
  return out.str();
}

namespace {

enum class Section { none, objective, constraints, bounds, general, end };

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

class LpReader {
public:
  explicit LpReader(std::string_view text) : text_(text) {}

  IlpModel read() {
    split();
    if (!have_n_ || !have_d_)
      throw ParseError("missing '\\ n = .., d = ..' header comment", 1);
    model_.n = n_;
    model_.d = d_;
    model_.upper_bounds.assign(model_.num_vars(), std::nullopt);

    std::size_t k = 0;
    Section section = Section::none;
    while (k < tokens_.size()) {
      const auto &tok = tokens_[k];
      const std::string lower = lowercase(tok.text);
      if (lower == "maximize" || lower == "maximise" || lower == "max") {
        section = Section::objective;
        ++k;
        continue;
      }
      if (lower == "subject" && k + 1 < tokens_.size() && lowercase(tokens_[k + 1].text) == "to") {
        section = Section::constraints;
        k += 2;
        continue;
      }
      if (lower == "bounds") {
        section = Section::bounds;
        ++k;
        continue;
      }
      if (lower == "general" || lower == "generals" || lower == "integers") {
        section = Section::general;
        ++k;
        continue;
      }
      if (lower == "end") {
        section = Section::end;
        ++k;
        continue;
      }
      switch (section) {
      case Section::objective:
        k = read_objective(k);
        break;
      case Section::constraints:
        k = read_constraint(k);
        break;
      case Section::bounds:
        k = read_bound(k);
        break;
      case Section::general:
        variable(tok);
        ++k;
        break;
      default:
        throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);
      }
    }
    return std::move(model_);
  }

private:
  static std::string lowercase(std::string s) {
    for (auto &c : s)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  void split() {
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos)
        eol = text_.size();
      std::string_view l = text_.substr(pos, eol - pos);
      if (!l.empty() && l.front() == '\\') {
        parse_header(l);
      } else {
        std::size_t i = 0;
        while (i < l.size()) {
          const char c = l[i];
          if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
          }
          const std::size_t start = i;
          if (c == '<' || c == '>' || c == '=') {
            ++i;
            if (i < l.size() && l[i] == '=')
              ++i;
          } else if (c == '+' || c == '-') {
            ++i;
          } else if (c == ':') {
            ++i;
          } else {
            while (i < l.size() && l[i] != ' ' && l[i] != '\t' && l[i] != '\r' && l[i] != ':' && l[i] != '<' &&
                   l[i] != '>' && l[i] != '=' && l[i] != '+' && l[i] != '-')
              ++i;
          }
          tokens_.push_back({std::string(l.substr(start, i - start)), line, start + 1});
        }
      }
      if (eol == text_.size())
        break;
      pos = eol + 1;
      ++line;
    }
  }

  void parse_header(std::string_view l) {
    unsigned n = 0, d = 0;
    const std::string s(l);
    if (std::sscanf(s.c_str(), "\\ n = %u, d = %u", &n, &d) == 2) {
      n_ = n;
      d_ = d;
      have_n_ = have_d_ = true;
    }
  }

  bool is_number(const std::string &s) const {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  std::size_t variable(const Token &tok) {
    unsigned b = 0, a = 0;
    char tail = 0;
    if (std::sscanf(tok.text.c_str(), "x_%u_%u%c", &b, &a, &tail) != 2 || b < 1 || a < 1 || b > n_ || a > n_)
      throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.column);
    return model_.var(b, a);
  }

  // Reads "[name:] terms" up to a relation or section keyword.
  std::size_t read_terms(std::size_t k, std::vector<Term> &terms) {
    int sign = 1;
    BigInt coef = 1;
    bool have_coef = false;
    while (k < tokens_.size()) {
      const auto &tok = tokens_[k];
      if (tok.text == "<=" || tok.text == ">=" || tok.text == "=" || tok.text == "<" || tok.text == ">")
        break;
      if (tok.text == "+") {
        sign = 1;
      } else if (tok.text == "-") {
        sign = -sign;
      } else if (is_number(tok.text)) {
        coef = BigInt(tok.text);
        have_coef = true;
      } else {
        const std::string lower = lowercase(tok.text);
        if (lower == "subject" || lower == "bounds" || lower == "general" || lower == "generals" ||
            lower == "integers" || lower == "end")
          break;
        if (k + 1 < tokens_.size() && tokens_[k + 1].text == ":") {
          k += 2; // row label
          continue;
        }
        terms.push_back({variable(tok), sign * coef});
        sign = 1;
        coef = 1;
        have_coef = false;
      }
      ++k;
    }
    if (have_coef)
      throw ParseError("coefficient without a variable", tokens_[k - 1].line, tokens_[k - 1].column);
    return k;
  }

  std::size_t read_objective(std::size_t k) {
    if (k + 1 < tokens_.size() && tokens_[k + 1].text == ":")
      k += 2;
    return read_terms(k, model_.objective);
  }

  std::size_t read_constraint(std::size_t k) {
    LinearRow row;
    if (k + 1 < tokens_.size() && tokens_[k + 1].text == ":") {
      row.name = tokens_[k].text;
      k += 2;
    } else {
      row.name = "r" + std::to_string(model_.inequality_rows.size() + model_.equality_rows.size() + 1);
    }
    k = read_terms(k, row.terms);
    if (k + 1 >= tokens_.size())
      throw ParseError("constraint '" + row.name + "' has no right-hand side");
    const std::string rel = tokens_[k].text;
    std::size_t r = k + 1;
    int sign = 1;
    if (tokens_[r].text == "-" || tokens_[r].text == "+") {
      sign = tokens_[r].text == "-" ? -1 : 1;
      ++r;
    }
    if (r >= tokens_.size() || !is_number(tokens_[r].text))
      throw ParseError("expected a numeric right-hand side", tokens_[k].line, tokens_[k].column);
    row.rhs = sign * BigInt(tokens_[r].text);
    if (rel == "<=" || rel == "<") {
      model_.inequality_rows.push_back(std::move(row));
    } else if (rel == "=") {
      model_.equality_rows.push_back(std::move(row));
    } else {
      for (auto &t : row.terms)
        t.coef = -t.coef;
      row.rhs = -row.rhs;
      model_.inequality_rows.push_back(std::move(row));
    }
    return r + 1;
  }

  std::size_t read_bound(std::size_t k) {
    // "l <= x <= u", "x >= l" or "x <= u"; only non-negative lower bounds of 0 are representable.
    const auto &first = tokens_[k];
    if (is_number(first.text)) {
      if (k + 4 >= tokens_.size() || tokens_[k + 1].text != "<=" || tokens_[k + 3].text != "<=")
        throw ParseError("unsupported bound form", first.line, first.column);
      if (BigInt(first.text) != 0)
        throw ParseError("only zero lower bounds are supported", first.line, first.column);
      const std::size_t v = variable(tokens_[k + 2]);
      model_.upper_bounds[v] = BigInt(tokens_[k + 4].text);
      return k + 5;
    }
    const std::size_t v = variable(first);
    if (k + 2 >= tokens_.size())
      throw ParseError("truncated bound", first.line, first.column);
    const std::string rel = tokens_[k + 1].text;
    if (rel == "<=") {
      model_.upper_bounds[v] = BigInt(tokens_[k + 2].text);
    } else if (rel == ">=") {
      if (BigInt(tokens_[k + 2].text) != 0)
        throw ParseError("only zero lower bounds are supported", first.line, first.column);
    } else {
      throw ParseError("unsupported bound relation '" + rel + "'", first.line, first.column);
    }
    return k + 3;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  IlpModel model_;
  unsigned n_ = 0, d_ = 0;
  bool have_n_ = false, have_d_ = false;
};

} // namespace

IlpModel parse_lp(std::string_view text) { return LpReader(text).read(); }

} // namespace ulam
