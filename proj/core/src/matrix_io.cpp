#include "mqtc/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

struct Token {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  bool quoted = false;
};

std::optional<double> to_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

double number_or_fail(const Token& t, std::string_view format) {
  const auto v = to_number(t.text);
  if (!v) {
    throw parse_error(std::string(format) + ": expected a number, got '" + t.text + "'", t.line,
                      t.column);
  }
  return *v;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// ---------------------------------------------------------------- CSV

std::vector<std::vector<Token>> csv_rows(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    std::vector<Token> fields;
    std::size_t i = 0;
    bool blank = raw.find_first_not_of(" \t") == std::string_view::npos;
    while (!blank) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      Token t;
      t.line = line;
      t.column = i + 1;
      if (i < raw.size() && raw[i] == '"') {
        t.quoted = true;
        ++i;
        for (;;) {
          if (i >= raw.size()) throw parse_error("csv: unterminated quoted field", line, t.column);
          if (raw[i] == '"') {
            if (i + 1 < raw.size() && raw[i + 1] == '"') {
              t.text += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          t.text += raw[i++];
        }
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        if (i < raw.size() && raw[i] != ',') {
          throw parse_error("csv: text after closing quote", line, i + 1);
        }
      } else {
        const std::size_t comma = std::min(raw.find(',', i), raw.size());
        std::string_view field = raw.substr(i, comma - i);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
          field.remove_suffix(1);
        }
        t.text = std::string(field);
        i = comma;
      }
      fields.push_back(std::move(t));
      if (i >= raw.size()) break;
      ++i;  // comma
    }
    if (!blank) rows.push_back(std::move(fields));
    pos = end + 1;
    ++line;
  }
  return rows;
}

DistanceMatrix read_csv(std::string_view text) {
  auto rows = csv_rows(text);
  if (rows.empty()) throw parse_error("csv: no data", 1, 1);

  std::vector<std::string> header;
  std::size_t first = 0;
  {
    const auto& r0 = rows[0];
    auto numeric = [](const Token& t) { return !t.quoted && to_number(t.text).has_value(); };
    // A data row is numbers, optionally after a nonempty row name.
    const bool rest_numeric = std::all_of(r0.begin() + 1, r0.end(), numeric);
    const bool is_header = !rest_numeric || (!numeric(r0[0]) && r0[0].text.empty());
    if (is_header) {
      for (const auto& t : r0) header.push_back(t.text);
      first = 1;
    }
  }
  const std::size_t n = rows.size() - first;
  if (n == 0) throw parse_error("csv: header without data rows", rows[0][0].line, 1);
  if (!header.empty()) {
    if (header.size() == n + 1 && header.front().empty()) {
      header.erase(header.begin());
    } else if (header.size() != n) {
      throw parse_error("csv: header has " + std::to_string(header.size()) + " names for " +
                            std::to_string(n) + " rows",
                        rows[0][0].line, 1);
    }
  }

  const std::size_t width = rows[first].size();
  for (std::size_t r = first + 1; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw parse_error("csv: row has " + std::to_string(rows[r].size()) + " fields, expected " +
                            std::to_string(width),
                        rows[r][0].line, rows[r][0].column);
    }
  }

  std::vector<double> values;
  values.reserve(n * n);
  std::vector<std::string> row_names;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t offset = 0;
    if (row.size() == n + 1) {
      offset = 1;
      row_names.push_back(row[0].text);
    } else if (row.size() != n) {
      throw parse_error("csv: row has " + std::to_string(row.size()) + " fields, expected " +
                            std::to_string(n),
                        row[0].line, row[0].column);
    }
    for (std::size_t j = offset; j < row.size(); ++j) values.push_back(number_or_fail(row[j], "csv"));
  }
  if (!row_names.empty() && row_names.size() != n) {
    throw parse_error("csv: row names present on some rows only", rows[first][0].line, 1);
  }
  if (!header.empty() && !row_names.empty() && header != row_names) {
    throw parse_error("csv: row names differ from the header", rows[first][0].line, 1);
  }
  auto names = !header.empty() ? std::move(header) : std::move(row_names);
  return DistanceMatrix(n, std::move(values), std::move(names));
}

std::string csv_field(const std::string& s) {
  const bool needs_quotes = s.find_first_of(",\"\n\r") != std::string::npos || s.empty() ||
                            s.front() == ' ' || s.back() == ' ' || to_number(s).has_value();
  if (!needs_quotes) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string write_csv(const DistanceMatrix& dm) {
  std::string out;
  for (const auto& name : dm.names()) out += "," + csv_field(name);
  out += '\n';
  for (std::size_t i = 0; i < dm.size(); ++i) {
    out += csv_field(dm.names()[i]);
    for (std::size_t j = 0; j < dm.size(); ++j) out += "," + format_real(dm(i, j));
    out += '\n';
  }
  return out;
}

// ------------------------------------------------- whitespace tokens

// Splits on whitespace; when `punctuation` is set, ';' '=' ',' are separate
// tokens, [comments] are skipped and single-quoted tokens are supported.
std::vector<Token> tokenize(std::string_view text, bool punctuation) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto step = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  auto is_punct = [&](char c) { return punctuation && (c == ';' || c == '=' || c == ','); };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      step();
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (punctuation && c == '[') {
      while (i < text.size() && text[i] != ']') step();
      if (i >= text.size()) throw parse_error("nexus: unterminated comment", t.line, t.column);
      step();
      continue;
    }
    if (is_punct(c)) {
      t.text = std::string(1, c);
      step();
    } else if (punctuation && c == '\'') {
      t.quoted = true;
      step();
      for (;;) {
        if (i >= text.size()) throw parse_error("nexus: unterminated quoted token", t.line, t.column);
        if (text[i] == '\'') {
          step();
          if (i < text.size() && text[i] == '\'') {
            t.text += '\'';
            step();
            continue;
          }
          break;
        }
        t.text += text[i];
        step();
      }
    } else {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             !is_punct(text[i]) && !(punctuation && (text[i] == '[' || text[i] == '\''))) {
        t.text += text[i];
        step();
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ------------------------------------------------------------- PHYLIP

DistanceMatrix read_phylip(std::string_view text) {
  const auto tokens = tokenize(text, false);
  if (tokens.empty()) throw parse_error("phylip: no data", 1, 1);
  std::size_t n = 0;
  {
    const auto& t = tokens[0];
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || n == 0) {
      throw parse_error("phylip: expected the entry count, got '" + t.text + "'", t.line, t.column);
    }
  }
  std::size_t k = 1;
  std::vector<std::string> names;
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (k >= tokens.size()) {
      const auto& last = tokens.back();
      throw parse_error("phylip: expected " + std::to_string(n) + " rows, file ends early",
                        last.line, last.column);
    }
    names.push_back(tokens[k++].text);
    for (std::size_t j = 0; j < n; ++j) {
      if (k >= tokens.size()) {
        const auto& last = tokens.back();
        throw parse_error("phylip: row " + std::to_string(i + 1) + " ends early", last.line,
                          last.column);
      }
      values.push_back(number_or_fail(tokens[k++], "phylip"));
    }
  }
  if (k < tokens.size()) {
    throw parse_error("phylip: unexpected trailing text '" + tokens[k].text + "'", tokens[k].line,
                      tokens[k].column);
  }
  return DistanceMatrix(n, std::move(values), std::move(names));
}

std::string write_phylip(const DistanceMatrix& dm) {
  std::string out = std::to_string(dm.size()) + "\n";
  for (std::size_t i = 0; i < dm.size(); ++i) {
    const auto& name = dm.names()[i];
    if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) {
          return std::isspace(c);
        })) {
      throw invalid_input_error("phylip output cannot hold the name '" + name + "'");
    }
    out += name;
    for (std::size_t j = 0; j < dm.size(); ++j) out += " " + format_real(dm(i, j));
    out += '\n';
  }
  return out;
}

// -------------------------------------------------------------- Nexus

class NexusReader {
 public:
  explicit NexusReader(std::string_view text) : tokens_(tokenize(text, true)) {}

  DistanceMatrix read() {
    if (tokens_.empty() || upper(tokens_[0].text) != "#NEXUS") {
      throw parse_error("nexus: missing #NEXUS header", 1, 1);
    }
    k_ = 1;
    std::optional<DistanceMatrix> result;
    while (k_ < tokens_.size()) {
      if (keyword() != "BEGIN") {
        fail("expected BEGIN");
      }
      ++k_;
      const std::string block = keyword();
      ++k_;
      expect(";");
      if (block == "TAXA") {
        read_taxa();
      } else if (block == "DISTANCES") {
        result = read_distances();
      } else {
        skip_block();
      }
    }
    if (!result) throw parse_error("nexus: no DISTANCES block", tokens_.back().line, 1);
    return std::move(*result);
  }

 private:
  const Token& current() const {
    if (k_ >= tokens_.size()) {
      const auto& last = tokens_.back();
      throw parse_error("nexus: unexpected end of input", last.line, last.column);
    }
    return tokens_[k_];
  }
  std::string keyword() const { return upper(current().text); }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = current();
    throw parse_error("nexus: " + what + ", got '" + t.text + "'", t.line, t.column);
  }
  void expect(std::string_view s) {
    if (current().quoted || current().text != s) fail("expected '" + std::string(s) + "'");
    ++k_;
  }
  bool is_end() const {
    const auto kw = keyword();
    return !current().quoted && (kw == "END" || kw == "ENDBLOCK");
  }
  void finish_block() {
    ++k_;
    expect(";");
  }
  void skip_command() {
    while (current().quoted || current().text != ";") ++k_;
    ++k_;
  }
  void skip_block() {
    while (!is_end()) skip_command();
    finish_block();
  }

  std::size_t read_count(std::string_view what) {
    const auto& t = current();
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v == 0) {
      fail("expected a positive " + std::string(what));
    }
    ++k_;
    return v;
  }

  std::optional<std::size_t> read_dimensions() {
    std::optional<std::size_t> ntax;
    ++k_;
    while (current().quoted || current().text != ";") {
      const auto kw = keyword();
      ++k_;
      expect("=");
      if (kw == "NTAX") {
        ntax = read_count("NTAX");
      } else {
        ++k_;
      }
    }
    ++k_;
    return ntax;
  }

  void read_taxa() {
    while (!is_end()) {
      const auto kw = keyword();
      if (kw == "DIMENSIONS") {
        taxa_count_ = read_dimensions();
      } else if (kw == "TAXLABELS") {
        ++k_;
        taxa_.clear();
        while (current().quoted || current().text != ";") taxa_.push_back(current().text), ++k_;
        ++k_;
      } else {
        skip_command();
      }
    }
    finish_block();
    if (taxa_count_ && !taxa_.empty() && *taxa_count_ != taxa_.size()) {
      throw parse_error("nexus: TAXLABELS count differs from NTAX", tokens_[k_ - 1].line, 1);
    }
  }

  DistanceMatrix read_distances() {
    std::optional<std::size_t> ntax;
    enum class Triangle { both, lower, upper } triangle = Triangle::lower;
    bool diagonal = true;
    bool labels = true;
    std::optional<DistanceMatrix> result;
    while (!is_end()) {
      const auto kw = keyword();
      if (kw == "DIMENSIONS") {
        ntax = read_dimensions();
      } else if (kw == "FORMAT") {
        ++k_;
        while (current().quoted || current().text != ";") {
          const auto opt = keyword();
          ++k_;
          if (opt == "TRIANGLE") {
            expect("=");
            const auto v = keyword();
            if (v == "BOTH") {
              triangle = Triangle::both;
            } else if (v == "LOWER") {
              triangle = Triangle::lower;
            } else if (v == "UPPER") {
              triangle = Triangle::upper;
            } else {
              fail("unknown TRIANGLE value");
            }
            ++k_;
          } else if (opt == "DIAGONAL") {
            diagonal = true;
          } else if (opt == "NODIAGONAL") {
            diagonal = false;
          } else if (opt == "LABELS") {
            if (!current().quoted && current().text == "=") {
              ++k_;
              const auto v = keyword();
              if (v == "LEFT" || v == "YES") {
                labels = true;
              } else if (v == "NO") {
                labels = false;
              } else {
                fail("unknown LABELS value");
              }
              ++k_;
            } else {
              labels = true;
            }
          } else if (opt == "NOLABELS") {
            labels = false;
          } else if (opt == "INTERLEAVE") {
            --k_;
            fail("interleaved matrices are not supported");
          } else if (!current().quoted && current().text == "=") {
            ++k_;
            ++k_;
          }
        }
        ++k_;
      } else if (kw == "MATRIX") {
        ++k_;
        const std::size_t n = ntax ? *ntax : taxa_count_ ? *taxa_count_ : taxa_.size();
        if (n == 0) fail("MATRIX before DIMENSIONS");
        std::vector<double> values(n * n, 0.0);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) {
          if (labels) {
            names.push_back(current().text);
            ++k_;
          }
          std::size_t lo = 0;
          std::size_t hi = n;
          if (triangle == Triangle::lower) hi = diagonal ? i + 1 : i;
          if (triangle == Triangle::upper) lo = diagonal ? i : i + 1;
          for (std::size_t j = lo; j < hi; ++j) {
            const double v = number_or_fail(current(), "nexus");
            ++k_;
            values[i * n + j] = v;
            if (triangle != Triangle::both) values[j * n + i] = v;
          }
        }
        expect(";");
        if (!labels) {
          if (!taxa_.empty() && taxa_.size() != n) {
            throw parse_error("nexus: TAXLABELS count differs from the matrix size",
                              tokens_[k_ - 1].line, 1);
          }
          names = taxa_;
        } else if (!taxa_.empty()) {
          auto a = names;
          auto b = taxa_;
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          if (a != b) {
            throw parse_error("nexus: matrix labels differ from TAXLABELS", tokens_[k_ - 1].line, 1);
          }
        }
        result = DistanceMatrix(n, std::move(values), std::move(names));
      } else {
        skip_command();
      }
    }
    finish_block();
    if (!result) throw parse_error("nexus: DISTANCES block without MATRIX", tokens_[k_ - 1].line, 1);
    return std::move(*result);
  }

  std::vector<Token> tokens_;
  std::size_t k_ = 0;
  std::vector<std::string> taxa_;
  std::optional<std::size_t> taxa_count_;
};

std::string nexus_word(const std::string& s) {
  const bool plain = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isgraph(c) && c != '\'' && c != ';' && c != '=' && c != ',' && c != '[' &&
           c != ']';
  });
  if (plain) return s;
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string write_nexus(const DistanceMatrix& dm) {
  const std::string n = std::to_string(dm.size());
  std::string out = "#NEXUS\n\nBEGIN TAXA;\n  DIMENSIONS NTAX=" + n + ";\n  TAXLABELS";
  for (const auto& name : dm.names()) out += " " + nexus_word(name);
  out += ";\nEND;\n\nBEGIN DISTANCES;\n  DIMENSIONS NTAX=" + n +
         ";\n  FORMAT TRIANGLE=BOTH DIAGONAL LABELS=LEFT;\n  MATRIX\n";
  for (std::size_t i = 0; i < dm.size(); ++i) {
    out += "    " + nexus_word(dm.names()[i]);
    for (std::size_t j = 0; j < dm.size(); ++j) out += " " + format_real(dm(i, j));
    out += '\n';
  }
  out += "  ;\nEND;\n";
  return out;
}

}  // namespace

std::string_view to_string(MatrixFormat f) noexcept {
  switch (f) {
    case MatrixFormat::csv: return "csv";
    case MatrixFormat::phylip: return "phylip";
    case MatrixFormat::nexus: return "nexus";
  }
  return "csv";
}

std::optional<MatrixFormat> parse_matrix_format(std::string_view name) noexcept {
  if (name == "csv") return MatrixFormat::csv;
  if (name == "phylip") return MatrixFormat::phylip;
  if (name == "nexus") return MatrixFormat::nexus;
  return std::nullopt;
}

MatrixFormat detect_matrix_format(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return MatrixFormat::csv;
  text.remove_prefix(start);
  if (text.size() >= 6 && upper(std::string(text.substr(0, 6))) == "#NEXUS") {
    return MatrixFormat::nexus;
  }
  std::string_view first = text.substr(0, text.find('\n'));
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) {
    first.remove_suffix(1);
  }
  const bool lone_integer = !first.empty() && std::all_of(first.begin(), first.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  return lone_integer ? MatrixFormat::phylip : MatrixFormat::csv;
}

DistanceMatrix read_matrix(std::string_view text, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::csv: return read_csv(text);
    case MatrixFormat::phylip: return read_phylip(text);
    case MatrixFormat::nexus: return NexusReader(text).read();
  }
  return read_csv(text);
}

DistanceMatrix read_matrix_file(const std::filesystem::path& path,
                                std::optional<MatrixFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot read matrix file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return read_matrix(text, format.value_or(detect_matrix_format(text)));
}

std::string write_matrix(const DistanceMatrix& dm, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::csv: return write_csv(dm);
    case MatrixFormat::phylip: return write_phylip(dm);
    case MatrixFormat::nexus: return write_nexus(dm);
  }
  return write_csv(dm);
}

std::string format_real(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace mqtc
