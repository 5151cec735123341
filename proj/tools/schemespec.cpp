#include "schemespec.hpp"

#include <upsub/io.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace upsub::tool {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw SpecError(key + ": expected an integer, got '" + value + "'");
  }
  if (used != value.size())
    throw SpecError(key + ": trailing characters in '" + value + "'");
  return v;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw SpecError(key + ": expected a number, got '" + value + "'");
  }
  if (used != value.size())
    throw SpecError(key + ": trailing characters in '" + value + "'");
  return v;
}

Rational parse_rational(const std::string& key, const std::string& value) {
  try {
    return Rational(value);
  } catch (const std::exception&) {
    throw SpecError(key + ": expected p or p/q, got '" + value + "'");
  }
}

std::vector<std::string> split_words(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty())
        out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

/// Directions written as (a,b) tuples, or bare integers in dimension one.
/// Commas and whitespace between entries are both fine.
std::vector<Direction> parse_directions(const std::string& key, const std::string& text) {
  std::vector<Direction> dirs;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    IndexVector v;
    if (text[i] == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw SpecError(key + ": unmatched '(' in '" + text + "'");
      std::stringstream ss(text.substr(i + 1, close - i - 1));
      std::string part;
      while (std::getline(ss, part, ','))
        v.push_back(static_cast<int>(parse_int(key, trim(part))));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != ',' && text[j] != '(')
        ++j;
      v.push_back(static_cast<int>(parse_int(key, text.substr(i, j - i))));
      i = j;
    }
    try {
      dirs.emplace_back(std::move(v));
    } catch (const std::exception& e) {
      throw SpecError(key + ": " + e.what());
    }
    skip_ws();
  }
  return dirs;
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty())
    return path;
  return (std::filesystem::path(base_dir) / p).string();
}

Mask load_mask(const std::string& key, const std::string& base_dir, const std::string& ref) {
  if (ref.rfind("bspline:", 0) == 0)
    return bspline_mask(static_cast<int>(parse_int(key, ref.substr(8))));
  if (ref.rfind("box3:", 0) == 0)
    return box3_mask(static_cast<int>(parse_int(key, ref.substr(5))));
  try {
    return read_mask_file(resolve(base_dir, ref));
  } catch (const std::exception& e) {
    throw SpecError(key + ": " + e.what());
  }
}

class KeyMap {
public:
  void insert(const std::string& key, const std::string& value, int line) {
    static const char* known[] = {"family", "r",     "dim",       "levels", "inner",
                                  "tau",    "basis", "pool",      "out",    "base_mask",
                                  "masks",  "lambda", "threads",  "cap"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known))
      throw SpecError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    if (!map_.emplace(key, value).second)
      throw SpecError("line " + std::to_string(line) + ": key '" + key + "' set twice");
  }

  const std::string* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  bool used(const std::string& key) const { return map_.count(key) > 0; }

private:
  std::map<std::string, std::string> map_;
};

} // namespace

const char* family_name(Family f) {
  switch (f) {
  case Family::kUnivariateUp:
    return "univariate_up";
  case Family::kBivariateUp:
    return "bivariate_up";
  case Family::kPowers:
    return "powers";
  case Family::kExplicit:
    return "explicit";
  }
  return "?";
}

Mask load_mask_ref(const std::string& ref, const std::string& base_dir) {
  return load_mask("mask", base_dir, ref);
}

SchemeSpec parse_spec(std::istream& is, const std::string& base_dir) {
  KeyMap keys;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw SpecError("line " + std::to_string(lineno) + ": expected key = value");
    keys.insert(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno);
  }

  const std::string* family = keys.find("family");
  if (!family)
    throw SpecError("missing required key 'family'");

  SchemeSpec spec;
  const bool preset = *family != "explicit";
  int r = 0;
  if (preset) {
    const std::string* rs = keys.find("r");
    if (!rs)
      throw SpecError("family " + *family + " requires key 'r'");
    const long long rv = parse_int("r", *rs);
    if (rv < 1 || rv > 30)
      throw SpecError("r: must be in 1..30");
    r = static_cast<int>(rv);
  } else if (keys.used("r")) {
    throw SpecError("key 'r' does not apply to explicit sequences");
  }

  try {
    if (*family == "univariate_up") {
      spec.sequence = MaskSequence::univariate_up(r);
    } else if (*family == "bivariate_up") {
      spec.sequence = MaskSequence::bivariate_up(r);
    } else if (*family == "powers") {
      const std::string* base = keys.find("base_mask");
      if (!base)
        throw SpecError("family powers requires key 'base_mask'");
      spec.sequence = MaskSequence::powers(load_mask("base_mask", base_dir, *base), r);
    } else if (*family == "explicit") {
      const std::string* masks = keys.find("masks");
      if (!masks)
        throw SpecError("family explicit requires key 'masks'");
      std::vector<Mask> list;
      for (const auto& ref : split_words(*masks))
        list.push_back(load_mask("masks", base_dir, ref));
      if (list.empty())
        throw SpecError("masks: no entries");
      std::vector<Rational> lambda;
      if (const std::string* ls = keys.find("lambda"))
        for (const auto& word : split_words(*ls))
          lambda.push_back(parse_rational("lambda", word));
      spec.sequence = MaskSequence::explicit_list(std::move(list), std::move(lambda));
    } else {
      throw SpecError("family: expected univariate_up, bivariate_up, powers or explicit, got '" +
                      *family + "'");
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string("sequence: ") + e.what());
  }

  if (*family != "powers" && keys.used("base_mask"))
    throw SpecError("key 'base_mask' only applies to the powers family");
  if (*family != "explicit" && keys.used("masks"))
    throw SpecError("key 'masks' only applies to explicit sequences");
  if (*family != "explicit" && keys.used("lambda"))
    throw SpecError("key 'lambda' only applies to explicit sequences");

  const int dim = spec.sequence.dim();
  if (const std::string* ds = keys.find("dim")) {
    if (parse_int("dim", *ds) != dim)
      throw SpecError("dim: declared " + *ds + " but the sequence is " +
                      std::to_string(dim) + "-dimensional");
  }

  if (const std::string* v = keys.find("levels")) {
    const long long k = parse_int("levels", *v);
    if (k < 1 || k > 64)
      throw SpecError("levels: must be in 1..64");
    spec.levels = static_cast<int>(k);
  }
  if (const std::string* v = keys.find("inner")) {
    const long long k = parse_int("inner", *v);
    if (k < 1 || k > 64)
      throw SpecError("inner: must be in 1..64");
    spec.inner = static_cast<int>(k);
  }
  if (const std::string* v = keys.find("tau")) {
    spec.tau = parse_double("tau", *v);
    if (spec.tau < 0)
      throw SpecError("tau: must be nonnegative");
  }
  if (const std::string* v = keys.find("out"))
    spec.out_dir = *v;
  if (const std::string* v = keys.find("threads")) {
    const long long t = parse_int("threads", *v);
    if (t < 1 || t > 256)
      throw SpecError("threads: must be in 1..256");
    spec.subdivision.threads = static_cast<int>(t);
  }
  if (const std::string* v = keys.find("cap")) {
    const long long c = parse_int("cap", *v);
    if (c < 1)
      throw SpecError("cap: must be positive");
    spec.subdivision.window_cap = c;
  }

  try {
    if (const std::string* v = keys.find("basis")) {
      std::vector<Basis> groups;
      std::stringstream ss(*v);
      std::string group;
      while (std::getline(ss, group, ';')) {
        const auto dirs = parse_directions("basis", trim(group));
        if (!dirs.empty())
          groups.push_back(Basis(dirs));
      }
      if (groups.empty())
        throw SpecError("basis: no direction groups");
      spec.bases = BasisSequence::list(std::move(groups));
    } else {
      spec.bases = BasisSequence::constant(Basis::canonical(dim));
    }
    if (spec.bases.dim() != dim)
      throw SpecError("basis: dimension differs from the sequence's");

    if (const std::string* v = keys.find("pool"))
      spec.pool = parse_directions("pool", *v);
    for (const auto& d : spec.pool)
      if (d.dim() != dim)
        throw SpecError("pool: direction dimension differs from the sequence's");
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string("basis: ") + e.what());
  }

  return spec;
}

SchemeSpec parse_spec_file(const std::string& path) {
  std::ifstream is(path);
  if (!is)
    throw SpecError("cannot open spec file: " + path);
  return parse_spec(is, std::filesystem::path(path).parent_path().string());
}

} // namespace upsub::tool
