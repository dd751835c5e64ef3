#include "blockalg/files.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blockalg/expr.hpp"

namespace blockalg {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_blank_or_comment(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::int64_t parse_int_token(const std::filesystem::path& path, std::size_t lineno,
                             const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw FileFormatError(path.string(), lineno, std::string("bad ") + what + ": '" + token + "'");
  }
}

}  // namespace

DerivationTable load_derivation_table(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);

  std::optional<Window> window;
  std::map<BasisIndex, Element> assignments;

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t lineno = n + 1;
    if (is_blank_or_comment(lines[n])) continue;
    const std::string line = trim(lines[n]);

    if (!window) {
      std::istringstream iss(line);
      std::string keyword, a, b, c, extra;
      iss >> keyword >> a >> b >> c;
      if (keyword != "window" || c.empty() || (iss >> extra))
        throw FileFormatError(path.string(), lineno,
                              "expected header 'window <alpha_min> <alpha_max> <i_max>'");
      const std::int64_t amin = parse_int_token(path, lineno, a, "alpha_min");
      const std::int64_t amax = parse_int_token(path, lineno, b, "alpha_max");
      const std::int64_t imax = parse_int_token(path, lineno, c, "i_max");
      try {
        window.emplace(amin, amax, imax);
      } catch (const std::invalid_argument& e) {
        throw FileFormatError(path.string(), lineno, e.what());
      }
      continue;
    }

    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      throw FileFormatError(path.string(), lineno, "expected 'L[b,j] -> <element>'");
    try {
      BasisIndex idx = parse_basis_index(trim(line.substr(0, arrow)));
      Element value = parse_element(trim(line.substr(arrow + 2)));
      if (!window->contains(idx))
        throw FileFormatError(path.string(), lineno,
                              "assignment for " + format_basis_index(idx) +
                                  " lies outside the declared window");
      if (!assignments.emplace(idx, std::move(value)).second)
        throw FileFormatError(path.string(), lineno,
                              "duplicate assignment for " + format_basis_index(idx));
    } catch (const SyntaxError& e) {
      throw FileFormatError(path.string(), lineno, e.what());
    } catch (const DomainError& e) {
      throw FileFormatError(path.string(), lineno, e.what());
    }
  }

  if (!window) throw FileFormatError(path.string(), lines.size(), "missing window header");
  return DerivationTable(*window, std::move(assignments));
}

namespace {

struct KeyValue {
  std::string value;
  std::size_t lineno = 0;
};

using Record = std::map<std::string, KeyValue>;

KeyValue take(const std::filesystem::path& path, Record& record, const std::string& key,
              std::size_t section_line) {
  auto it = record.find(key);
  if (it == record.end())
    throw FileFormatError(path.string(), section_line, "missing key: " + key);
  KeyValue kv = std::move(it->second);
  record.erase(it);
  return kv;
}

void reject_leftovers(const std::filesystem::path& path, const Record& record) {
  if (!record.empty())
    throw FileFormatError(path.string(), record.begin()->second.lineno,
                          "unknown key: " + record.begin()->first);
}

template <typename Fn>
auto parse_value(const std::filesystem::path& path, const KeyValue& kv, Fn&& fn) {
  try {
    return fn(kv.value);
  } catch (const SyntaxError& e) {
    throw FileFormatError(path.string(), kv.lineno, e.what());
  } catch (const DomainError& e) {
    throw FileFormatError(path.string(), kv.lineno, e.what());
  }
}

}  // namespace

WitnessFamilySpec load_witness_family(const std::filesystem::path& path, bool validate_kernels) {
  const std::vector<std::string> lines = read_lines(path);

  Record top;
  std::vector<Record> sections;
  std::vector<std::size_t> section_lines;
  Record* current = &top;

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t lineno = n + 1;
    if (is_blank_or_comment(lines[n])) continue;
    const std::string line = trim(lines[n]);

    if (line == "[[perturbation]]") {
      sections.emplace_back();
      section_lines.push_back(lineno);
      current = &sections.back();
      continue;
    }
    if (line.front() == '[')
      throw FileFormatError(path.string(), lineno, "unknown section: " + line);

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw FileFormatError(path.string(), lineno, "expected 'key = \"value\"'");
    const std::string key = trim(line.substr(0, eq));
    const std::string raw = trim(line.substr(eq + 1));
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
      throw FileFormatError(path.string(), lineno, "value must be a double-quoted string");
    const std::string value = raw.substr(1, raw.size() - 2);
    if (value.find('"') != std::string::npos)
      throw FileFormatError(path.string(), lineno, "value must not contain '\"'");
    if (!current->emplace(key, KeyValue{value, lineno}).second)
      throw FileFormatError(path.string(), lineno, "duplicate key: " + key);
  }

  WitnessFamilySpec spec;
  KeyValue hidden = take(path, top, "hidden", lines.size());
  spec.hidden = parse_value(path, hidden, [](const std::string& v) { return parse_derivation(v); });
  reject_leftovers(path, top);

  for (std::size_t s = 0; s < sections.size(); ++s) {
    Record& record = sections[s];
    const std::size_t at = section_lines[s];
    WitnessPerturbation p;
    p.x = parse_value(path, take(path, record, "x", at),
                      [](const std::string& v) { return parse_element(v); });
    p.y = parse_value(path, take(path, record, "y", at),
                      [](const std::string& v) { return parse_element(v); });
    p.kernel = parse_value(path, take(path, record, "kernel", at),
                           [](const std::string& v) { return parse_derivation(v); });
    p.coeff = parse_value(path, take(path, record, "coeff", at),
                          [](const std::string& v) { return parse_scalar(v); });
    reject_leftovers(path, record);
    spec.perturbations.push_back(std::move(p));
  }

  if (validate_kernels) spec.validate();
  return spec;
}

}  // namespace blockalg
