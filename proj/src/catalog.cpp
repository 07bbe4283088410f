#include "grptool/catalog.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grptool/error.hpp"

namespace grptool {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos)
    s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_at(const std::string& source, std::size_t lineno,
                          const std::string& msg) {
  throw parse_error(source + ":" + std::to_string(lineno) + ": " + msg);
}

unsigned parse_param(const std::string& token, const std::string& source,
                     std::size_t lineno) {
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos)
    fail_at(source, lineno, "expected a number, got '" + token + "'");
  unsigned long v = 0;
  try {
    v = std::stoul(token);
  } catch (const std::exception&) {
    fail_at(source, lineno, "number out of range: '" + token + "'");
  }
  if (v == 0 || v > 1000)
    fail_at(source, lineno, "parameter out of range: " + token);
  return static_cast<unsigned>(v);
}

GroupTable make_family(const std::string& family, unsigned n,
                       std::size_t max_elements) {
  if (family == "cyclic")
    return cyclic(n, max_elements);
  if (family == "dihedral")
    return dihedral(n, max_elements);
  if (family == "symmetric")
    return symmetric(n, max_elements);
  if (family == "alternating")
    return alternating(n, max_elements);
  throw usage_error("unknown group family '" + family + "'");
}

char family_letter(const std::string& family) {
  if (family == "cyclic")
    return 'C';
  if (family == "dihedral")
    return 'D';
  if (family == "symmetric")
    return 'S';
  if (family == "alternating")
    return 'A';
  throw usage_error("unknown group family '" + family + "'");
}

bool known_family(const std::string& family) {
  return family == "cyclic" || family == "dihedral" ||
         family == "symmetric" || family == "alternating";
}

std::string file_display_name(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

} // namespace

NamedGroup parse_group_file(const std::string& text, const std::string& source,
                            std::size_t max_elements) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  unsigned degree = 0;
  bool have_degree = false;
  std::string name;
  std::vector<Permutation> generators;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty())
      continue;
    if (!have_degree) {
      std::istringstream fields(line);
      std::string keyword, value, extra;
      fields >> keyword >> value;
      if (keyword != "degree" || value.empty() || fields >> extra)
        fail_at(source, lineno, "expected 'degree <n>' as the first entry");
      if (value.find_first_not_of("0123456789") != std::string::npos)
        fail_at(source, lineno, "degree must be a positive integer");
      unsigned long v = 0;
      try {
        v = std::stoul(value);
      } catch (const std::exception&) {
        fail_at(source, lineno, "degree out of range: " + value);
      }
      if (v == 0 || v > 10000)
        fail_at(source, lineno, "degree out of range: " + value);
      degree = static_cast<unsigned>(v);
      have_degree = true;
      continue;
    }
    if (line.starts_with("name ") && generators.empty()) {
      name = strip(line.substr(5));
      if (name.empty())
        fail_at(source, lineno, "empty group name");
      continue;
    }
    try {
      generators.push_back(Permutation::parse_cycles(line, degree));
    } catch (const parse_error& e) {
      fail_at(source, lineno, e.what());
    }
  }
  if (!have_degree)
    fail_at(source, lineno + 1, "missing 'degree <n>' line");
  if (generators.empty())
    fail_at(source, lineno + 1, "no generator lines");
  if (name.empty())
    name = source;
  return {std::move(name),
          GroupTable::close(degree, std::move(generators), max_elements)};
}

NamedGroup load_group_file(const std::string& path, std::size_t max_elements) {
  std::ifstream in(path);
  if (!in)
    throw usage_error("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), file_display_name(path), max_elements);
}

CatalogSpec parse_catalog_spec(const std::string& text,
                               const std::string& source) {
  CatalogSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    CatalogEntry entry;
    if (head == "quaternion8") {
      std::string extra;
      if (fields >> extra)
        fail_at(source, lineno, "quaternion8 takes no parameters");
      entry.kind = CatalogEntry::Kind::quaternion;
    } else if (head == "product") {
      entry.kind = CatalogEntry::Kind::product;
      std::string factor;
      while (fields >> factor) {
        const auto colon = factor.find(':');
        if (colon == std::string::npos)
          fail_at(source, lineno,
                  "product factors look like family:n, got '" + factor + "'");
        const std::string family = factor.substr(0, colon);
        if (!known_family(family))
          fail_at(source, lineno, "unknown group family '" + family + "'");
        entry.factors.emplace_back(
            family, parse_param(factor.substr(colon + 1), source, lineno));
      }
      if (entry.factors.size() < 2)
        fail_at(source, lineno, "product needs at least two factors");
    } else if (head == "file") {
      entry.kind = CatalogEntry::Kind::file;
      std::string rest;
      std::getline(fields, rest);
      entry.path = strip(rest);
      if (entry.path.empty())
        fail_at(source, lineno, "file entry needs a path");
    } else if (known_family(head)) {
      entry.kind = CatalogEntry::Kind::family_range;
      entry.family = head;
      std::string range, extra;
      if (!(fields >> range) || fields >> extra)
        fail_at(source, lineno, "expected '" + head + " <lo>..<hi>'");
      const auto dots = range.find("..");
      if (dots == std::string::npos) {
        entry.lo = entry.hi = parse_param(range, source, lineno);
      } else {
        entry.lo = parse_param(range.substr(0, dots), source, lineno);
        entry.hi = parse_param(range.substr(dots + 2), source, lineno);
      }
      if (entry.lo > entry.hi)
        fail_at(source, lineno, "empty range " + range);
    } else {
      fail_at(source, lineno, "unknown catalog entry '" + head + "'");
    }
    spec.entries.push_back(std::move(entry));
  }
  return spec;
}

const std::string& default_catalog_text() {
  static const std::string text =
      "# default verification catalog\n"
      "cyclic 1..32\n"
      "dihedral 3..16\n"
      "symmetric 3..6\n"
      "alternating 3..6\n"
      "quaternion8\n"
      "product cyclic:2 cyclic:2\n"
      "product cyclic:2 cyclic:4\n"
      "product cyclic:3 symmetric:3\n"
      "product cyclic:2 alternating:4\n"
      "product cyclic:6 cyclic:5\n"
      "product dihedral:4 cyclic:3\n";
  return text;
}

std::vector<NamedGroup> expand_catalog(const CatalogSpec& spec,
                                       std::size_t max_elements,
                                       const std::string& base_dir) {
  std::vector<NamedGroup> groups;
  for (const auto& entry : spec.entries) {
    switch (entry.kind) {
    case CatalogEntry::Kind::family_range:
      for (unsigned n = entry.lo; n <= entry.hi; ++n)
        groups.push_back({family_letter(entry.family) + std::to_string(n),
                          make_family(entry.family, n, max_elements)});
      break;
    case CatalogEntry::Kind::quaternion:
      groups.push_back({"Q8", quaternion8()});
      break;
    case CatalogEntry::Kind::product: {
      std::string name;
      GroupTable g = make_family(entry.factors[0].first,
                                 entry.factors[0].second, max_elements);
      name = family_letter(entry.factors[0].first) +
             std::to_string(entry.factors[0].second);
      for (std::size_t i = 1; i < entry.factors.size(); ++i) {
        GroupTable h = make_family(entry.factors[i].first,
                                   entry.factors[i].second, max_elements);
        name += "x" + (family_letter(entry.factors[i].first) +
                       std::to_string(entry.factors[i].second));
        g = direct_product(g, h, max_elements);
      }
      groups.push_back({std::move(name), std::move(g)});
      break;
    }
    case CatalogEntry::Kind::file: {
      std::filesystem::path p(entry.path);
      if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
      groups.push_back(load_group_file(p.string(), max_elements));
      break;
    }
    }
  }
  return groups;
}

bool is_builtin_name(const std::string& name) {
  if (name == "Q8")
    return true;
  if (name.size() < 2)
    return false;
  const char letter = name[0];
  if (letter != 'C' && letter != 'D' && letter != 'S' && letter != 'A')
    return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      return false;
  return true;
}

NamedGroup builtin_group(const std::string& name, std::size_t max_elements) {
  if (!is_builtin_name(name))
    throw usage_error("'" + name + "' is not a builtin group name");
  if (name == "Q8")
    return {"Q8", quaternion8()};
  unsigned long n = 0;
  try {
    n = std::stoul(name.substr(1));
  } catch (const std::exception&) {
    throw usage_error("'" + name + "' is not a builtin group name");
  }
  if (n == 0 || n > 1000)
    throw usage_error("builtin parameter out of range in '" + name + "'");
  const auto v = static_cast<unsigned>(n);
  switch (name[0]) {
  case 'C':
    return {name, cyclic(v, max_elements)};
  case 'D':
    return {name, dihedral(v, max_elements)};
  case 'S':
    return {name, symmetric(v, max_elements)};
  default:
    return {name, alternating(v, max_elements)};
  }
}

NamedGroup load_group_argument(const std::string& arg,
                               std::size_t max_elements) {
  if (is_builtin_name(arg))
    return builtin_group(arg, max_elements);
  if (std::filesystem::exists(arg))
    return load_group_file(arg, max_elements);
  throw usage_error("'" + arg +
                    "' is neither a builtin group name nor a group file");
}

} // namespace grptool
