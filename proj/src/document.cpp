#include "lieobstruct/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lieobstruct/error.hpp"

namespace lieobstruct {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kMaxDocumentRank = 128;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("algebra document: " + where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::uint64_t require_uint(const json& parent, const std::string& key, const std::string& path) {
  const auto it = parent.find(key);
  if (it == parent.end()) fail(path, "missing field '" + key + "'");
  if (!it->is_number_integer()) fail(path + "." + key, "expected an integer");
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  const auto v = it->get<std::int64_t>();
  if (v < 0) fail(path + "." + key, "must be non-negative, got " + std::to_string(v));
  return static_cast<std::uint64_t>(v);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(path, "unknown field '" + key + "'");
    }
  }
}

std::uint64_t parse_coefficient(const json& value, const RingSpec& ring, const std::string& path) {
  if (ring.family() == RingFamily::PadicQuotient) {
    if (!value.is_number_integer()) fail(path, "expected an integer in [0, " + std::to_string(ring.order()) + ")");
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() >= ring.order()) {
      fail(path, "coefficient " + value.dump() + " is not a canonical representative of " + ring.name());
    }
    return value.get<std::uint64_t>();
  }
  if (!value.is_array() || value.size() != ring.level()) {
    fail(path, "expected a list of " + std::to_string(ring.level()) + " digits");
  }
  std::vector<std::uint64_t> digits;
  for (std::size_t d = 0; d < value.size(); ++d) {
    const auto& x = value[d];
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= ring.prime()) {
      fail(path + "[" + std::to_string(d) + "]", "digit " + x.dump() + " is not in [0, " +
                                                     std::to_string(ring.prime()) + ")");
    }
    digits.push_back(x.get<std::uint64_t>());
  }
  return ring.from_digits(digits);
}

ordered_json coefficient_json(const RingSpec& ring, std::uint64_t v) {
  if (ring.family() == RingFamily::PadicQuotient) return v;
  return ring.digits(v);
}

}  // namespace

ordered_json to_json(const BracketAlgebra& algebra) {
  const RingSpec& ring = algebra.ring();
  const std::size_t n = algebra.dim();
  ordered_json doc;
  doc["family"] = to_string(ring.family());
  doc["p"] = ring.prime();
  doc["k"] = ring.level();
  doc["n"] = n;
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto br = algebra.basis_bracket(i, j);
      if (std::all_of(br.begin(), br.end(), [](std::uint64_t c) { return c == 0; })) continue;
      ordered_json entry;
      entry["i"] = i;
      entry["j"] = j;
      ordered_json coeffs = ordered_json::array();
      for (auto c : br) coeffs.push_back(coefficient_json(ring, c));
      entry["coeffs"] = std::move(coeffs);
      brackets.push_back(std::move(entry));
    }
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

std::string serialize(const BracketAlgebra& algebra) { return to_json(algebra).dump(2) + "\n"; }

BracketAlgebra parse_algebra_json(const json& doc) {
  if (!doc.is_object()) fail("document", "top level must be an object");
  reject_unknown(doc, {"family", "p", "k", "n", "brackets"}, "document");

  const auto fam = doc.find("family");
  if (fam == doc.end()) fail("document", "missing field 'family'");
  if (!fam->is_string()) fail("family", "expected a string");
  RingFamily family;
  if (*fam == "padic") {
    family = RingFamily::PadicQuotient;
  } else if (*fam == "power_series") {
    family = RingFamily::PowerSeriesQuotient;
  } else {
    fail("family", "expected \"padic\" or \"power_series\", got " + fam->dump());
  }

  const std::uint64_t p = require_uint(doc, "p", "document");
  const std::uint64_t k = require_uint(doc, "k", "document");
  const std::uint64_t n = require_uint(doc, "n", "document");
  if (k == 0 || k > 64) fail("k", "level must be in [1, 64]");
  if (n > kMaxDocumentRank) fail("n", "rank " + std::to_string(n) + " exceeds " + std::to_string(kMaxDocumentRank));
  RingSpec ring = [&] {
    try {
      return RingSpec(family, p, static_cast<unsigned>(k));
    } catch (const InputError& e) {
      fail("p/k", e.what());
    }
  }();

  const auto br = doc.find("brackets");
  if (br == doc.end()) fail("document", "missing field 'brackets'");
  if (!br->is_array()) fail("brackets", "expected an array");

  std::vector<std::uint64_t> c(n * n * n, 0);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::size_t e = 0; e < br->size(); ++e) {
    const std::string path = "brackets[" + std::to_string(e) + "]";
    const auto& entry = (*br)[e];
    if (!entry.is_object()) fail(path, "expected an object");
    reject_unknown(entry, {"i", "j", "coeffs"}, path);
    const std::uint64_t i = require_uint(entry, "i", path);
    const std::uint64_t j = require_uint(entry, "j", path);
    if (i >= j) fail(path, "requires i < j, got i = " + std::to_string(i) + ", j = " + std::to_string(j));
    if (j >= n) fail(path + ".j", "index " + std::to_string(j) + " out of range for n = " + std::to_string(n));
    if (!seen.emplace(i, j).second) {
      fail(path, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") appears twice");
    }
    const auto co = entry.find("coeffs");
    if (co == entry.end()) fail(path, "missing field 'coeffs'");
    if (!co->is_array() || co->size() != n) fail(path + ".coeffs", "expected " + std::to_string(n) + " entries");
    for (std::size_t m = 0; m < n; ++m) {
      const std::uint64_t v = parse_coefficient((*co)[m], ring, path + ".coeffs[" + std::to_string(m) + "]");
      c[(i * n + j) * n + m] = v;
      c[(j * n + i) * n + m] = ring.neg(v);
    }
  }
  return BracketAlgebra(ring, n, std::move(c));
}

BracketAlgebra parse_algebra_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("algebra document: " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": malformed JSON");
  }
  return parse_algebra_json(doc);
}

BracketAlgebra load_algebra_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open algebra document '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra_document(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

LieAlgebra require_lie(const BracketAlgebra& algebra) {
  if (const auto bad = algebra.jacobi_failure()) {
    throw InputError("bracket fails the Jacobi identity on basis triple (" + std::to_string((*bad)[0]) + "," +
                     std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
  }
  return LieAlgebra(algebra);
}

}  // namespace lieobstruct
