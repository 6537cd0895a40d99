#include "contpath/multiseries.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace contpath::series {

MultiSeries::MultiSeries(int dimension, int cap) : dimension_(dimension), cap_(cap) {
  if (dimension < 1) throw std::invalid_argument("MultiSeries: dimension must be >= 1");
  if (cap < 0) throw std::invalid_argument("MultiSeries: cap must be >= 0");
}

MultiSeries MultiSeries::constant(int dimension, int cap, const Rational& value) {
  MultiSeries out(dimension, cap);
  out.set_coefficient(Exponents::zeros(dimension), value);
  return out;
}

const Rational& MultiSeries::coefficient(const Exponents& e) const {
  static const Rational kZero = 0;
  const auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

void MultiSeries::set_coefficient(const Exponents& e, const Rational& value) {
  if (e.size() != dimension_) {
    throw std::invalid_argument("MultiSeries: exponent dimension mismatch");
  }
  if (e.total_degree() > cap_) {
    throw std::invalid_argument("MultiSeries: exponent degree exceeds cap");
  }
  if (value == 0) {
    terms_.erase(e);
  } else {
    terms_.insert_or_assign(e, value);
  }
}

namespace {

void require_same_dimension(const MultiSeries& a, const MultiSeries& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("MultiSeries: dimension mismatch");
  }
}

// Exponent vectors pack into one uint64 key (first variable in the high
// bits, so integer order on keys equals lexicographic order) whenever every
// entry fits in bits_per_entry and d * bits_per_entry <= 64.
int pack_bits(int cap) {
  const int bits = std::bit_width(static_cast<unsigned>(cap));
  return bits == 0 ? 1 : bits;
}

std::uint64_t pack_key(const Exponents& e, int bits) {
  std::uint64_t key = 0;
  for (int i = 0; i < e.size(); ++i) {
    key = (key << bits) | static_cast<std::uint64_t>(e[i]);
  }
  return key;
}

Exponents unpack_key(std::uint64_t key, int dimension, int bits) {
  const std::uint64_t mask = (bits == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << bits) - 1);
  std::vector<int> entries(static_cast<std::size_t>(dimension));
  for (int i = dimension - 1; i >= 0; --i) {
    entries[static_cast<std::size_t>(i)] = static_cast<int>(key & mask);
    key >>= bits;
  }
  return Exponents(std::move(entries));
}

Rational signed_product(const Rational& a, const Rational& b) {
  if (a == 1) return b;
  if (a == -1) return -b;
  if (b == 1) return a;
  if (b == -1) return -a;
  return a * b;
}

}  // namespace

MultiSeries add(const MultiSeries& a, const MultiSeries& b) {
  require_same_dimension(a, b);
  const int cap = std::min(a.cap(), b.cap());
  MultiSeries out(a.dimension(), cap);
  for (const auto& [e, c] : a.terms()) {
    if (e.total_degree() <= cap) out.set_coefficient(e, c);
  }
  for (const auto& [e, c] : b.terms()) {
    if (e.total_degree() <= cap) out.set_coefficient(e, out.coefficient(e) + c);
  }
  return out;
}

MultiSeries subtract(const MultiSeries& a, const MultiSeries& b) {
  require_same_dimension(a, b);
  const int cap = std::min(a.cap(), b.cap());
  MultiSeries out(a.dimension(), cap);
  for (const auto& [e, c] : a.terms()) {
    if (e.total_degree() <= cap) out.set_coefficient(e, c);
  }
  for (const auto& [e, c] : b.terms()) {
    if (e.total_degree() <= cap) out.set_coefficient(e, out.coefficient(e) - c);
  }
  return out;
}

MultiSeries scale(const MultiSeries& a, const Rational& factor) {
  MultiSeries out(a.dimension(), a.cap());
  if (factor == 0) return out;
  for (const auto& [e, c] : a.terms()) out.set_coefficient(e, signed_product(factor, c));
  return out;
}

MultiSeries multiply(const MultiSeries& a, const MultiSeries& b) {
  require_same_dimension(a, b);
  const int d = a.dimension();
  const int cap = std::min(a.cap(), b.cap());
  MultiSeries out(d, cap);
  if (a.is_zero() || b.is_zero()) return out;

  const int bits = pack_bits(cap);
  if (d * bits <= 64) {
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(std::min<std::size_t>(a.term_count() * b.term_count(), 1u << 16));
    for (const auto& [ea, ca] : a.terms()) {
      if (ea.total_degree() > cap) continue;
      const std::uint64_t base = pack_key(ea, bits);
      for (const auto& [eb, cb] : b.terms()) {
        if (ea.total_degree() + eb.total_degree() > cap) continue;
        // Packing each entry separately is valid because the truncated sum of
        // two exponent vectors has every entry <= cap, so no field overflows.
        acc[base + pack_key(eb, bits)] += signed_product(ca, cb);
      }
    }
    std::vector<std::pair<std::uint64_t, const Rational*>> keys;
    keys.reserve(acc.size());
    for (const auto& [key, c] : acc) {
      if (c != 0) keys.emplace_back(key, &c);
    }
    std::sort(keys.begin(), keys.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (const auto& [key, c] : keys) out.set_coefficient(unpack_key(key, d, bits), *c);
    return out;
  }

  std::map<Exponents, Rational> acc;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.total_degree() > cap) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.total_degree() + eb.total_degree() > cap) continue;
      acc[ea + eb] += signed_product(ca, cb);
    }
  }
  for (const auto& [e, c] : acc) {
    if (c != 0) out.set_coefficient(e, c);
  }
  return out;
}

MultiSeries truncated(const MultiSeries& a, int new_cap) {
  MultiSeries out(a.dimension(), new_cap);
  for (const auto& [e, c] : a.terms()) {
    if (e.total_degree() <= new_cap) out.set_coefficient(e, c);
  }
  return out;
}

namespace {

std::vector<BigInt> factorial_table(int cap) {
  std::vector<BigInt> table(static_cast<std::size_t>(cap) + 1);
  table[0] = 1;
  for (int i = 1; i <= cap; ++i) table[static_cast<std::size_t>(i)] = table[i - 1] * i;
  return table;
}

BigInt entrywise_factorial(const Exponents& e, const std::vector<BigInt>& table) {
  BigInt product = 1;
  for (int i = 0; i < e.size(); ++i) product *= table[static_cast<std::size_t>(e[i])];
  return product;
}

}  // namespace

MultiSeries borel(const MultiSeries& a) {
  const auto table = factorial_table(a.cap());
  MultiSeries out(a.dimension(), a.cap());
  for (const auto& [e, c] : a.terms()) {
    out.set_coefficient(e, c / Rational(entrywise_factorial(e, table)));
  }
  return out;
}

MultiSeries inverse_borel(const MultiSeries& a) {
  const auto table = factorial_table(a.cap());
  MultiSeries out(a.dimension(), a.cap());
  for (const auto& [e, c] : a.terms()) {
    out.set_coefficient(e, c * Rational(entrywise_factorial(e, table)));
  }
  return out;
}

MultiSeries partial_derivative(const MultiSeries& a, int axis) {
  if (axis < 1 || axis > a.dimension()) {
    throw std::invalid_argument("partial_derivative: axis must be in 1..dimension");
  }
  const int index = axis - 1;
  MultiSeries out(a.dimension(), std::max(a.cap() - 1, 0));
  for (const auto& [e, c] : a.terms()) {
    const int k = e[index];
    if (k == 0) continue;
    out.set_coefficient(e.bumped(index, -1), c * k);
  }
  return out;
}

namespace {

template <typename Scalar>
std::vector<std::vector<Scalar>> power_tables(const std::vector<Scalar>& point, int cap) {
  std::vector<std::vector<Scalar>> tables(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    auto& t = tables[i];
    t.resize(static_cast<std::size_t>(cap) + 1);
    t[0] = Scalar(1);
    for (int k = 1; k <= cap; ++k) t[static_cast<std::size_t>(k)] = t[k - 1] * point[i];
  }
  return tables;
}

void require_point_dimension(const MultiSeries& a, std::size_t n) {
  if (static_cast<int>(n) != a.dimension()) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
}

}  // namespace

Evaluation evaluate_with_tail(const MultiSeries& a, const std::vector<double>& point) {
  require_point_dimension(a, point.size());
  const auto powers = power_tables(point, a.cap());
  Evaluation result;
  for (const auto& [e, c] : a.terms()) {
    double monomial = to_double(c);
    for (int i = 0; i < e.size(); ++i) {
      monomial *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    }
    result.value += monomial;
    if (e.total_degree() == a.cap()) result.top_band_magnitude += std::fabs(monomial);
    ++result.terms_used;
  }
  return result;
}

double evaluate(const MultiSeries& a, const std::vector<double>& point) {
  return evaluate_with_tail(a, point).value;
}

Rational evaluate_exact(const MultiSeries& a, const std::vector<Rational>& point) {
  require_point_dimension(a, point.size());
  const auto powers = power_tables(point, a.cap());
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) {
    Rational monomial = c;
    for (int i = 0; i < e.size(); ++i) {
      monomial *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    }
    sum += monomial;
  }
  return sum;
}

std::size_t max_series_terms() {
  static constexpr std::size_t kDefault = 2000000;
  const char* raw = std::getenv("CONTPATH_MAX_SERIES_TERMS");
  if (raw == nullptr || *raw == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) return kDefault;
  return static_cast<std::size_t>(parsed);
}

MultiSeries expand_smirnov_gf(int dimension, int cap) {
  if (dimension < 1) throw std::invalid_argument("expand_smirnov_gf: dimension must be >= 1");
  if (cap < 0) throw std::invalid_argument("expand_smirnov_gf: cap must be >= 0");

  BigInt dense_bound = binomial(static_cast<long long>(cap) + dimension, dimension);
  if (dense_bound > BigInt(max_series_terms())) {
    throw ResourceLimitError(
        "expand_smirnov_gf: dense term bound " + dense_bound.str() +
        " exceeds the configured limit " + std::to_string(max_series_terms()) +
        " (set CONTPATH_MAX_SERIES_TERMS to raise it)");
  }

  // G = sum_i x_i/(1+x_i) truncated: entrywise alternating geometric series.
  MultiSeries g(dimension, cap);
  for (int i = 0; i < dimension; ++i) {
    for (int k = 1; k <= cap; ++k) {
      Exponents e = Exponents::zeros(dimension).bumped(i, k);
      g.set_coefficient(e, (k % 2 == 1) ? 1 : -1);
    }
  }

  // Truncated geometric series 1/(1-G) via Horner: acc <- 1 + G*acc.  Since G
  // has no constant term, `cap` iterations reach the full truncation.
  const MultiSeries one = MultiSeries::constant(dimension, cap, 1);
  MultiSeries acc = one;
  for (int iter = 0; iter < cap; ++iter) acc = add(one, multiply(g, acc));
  return acc;
}

std::string to_json(const MultiSeries& a) {
  std::string out = "{\"d\":" + std::to_string(a.dimension()) +
                    ",\"cap\":" + std::to_string(a.cap()) + ",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) out += ',';
    first = false;
    out += "{\"exp\":[";
    for (int i = 0; i < e.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(e[i]);
    }
    out += "],\"coef\":\"" + to_fraction_string(c) + "\"}";
  }
  out += "]}";
  return out;
}

MultiSeries from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("cap") || !j.contains("terms") ||
      !j["d"].is_number_integer() || !j["cap"].is_number_integer() ||
      !j["terms"].is_array()) {
    throw std::invalid_argument("from_json: expected {\"d\":int,\"cap\":int,\"terms\":[...]}");
  }
  MultiSeries out(j["d"].get<int>(), j["cap"].get<int>());
  std::set<std::vector<int>> seen;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coef") ||
        !term["exp"].is_array() || !term["coef"].is_string()) {
      throw std::invalid_argument("from_json: malformed term entry");
    }
    std::vector<int> entries;
    for (const auto& v : term["exp"]) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("from_json: exponent entries must be integers");
      }
      entries.push_back(v.get<int>());
    }
    if (!seen.insert(entries).second) {
      throw std::invalid_argument("from_json: duplicate exponent vector");
    }
    out.set_coefficient(Exponents(std::move(entries)),
                        parse_fraction(term["coef"].get<std::string>()));
  }
  return out;
}

}  // namespace contpath::series
