#include "qrac/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

using nlohmann::json;

[[noreturn]] void format_error(const std::string& path, const std::string& what) {
  throw SchemeFormatError(path + ": " + what);
}

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    format_error(path, "expected a [re, im] pair");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

json dump_complex(const Complex& c) { return json::array({c.real(), c.imag()}); }

ComplexMatrix parse_matrix(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != dim) {
    std::ostringstream msg;
    msg << "expected " << dim << " rows";
    format_error(path, msg.str());
  }
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != dim) {
      std::ostringstream msg;
      msg << "row " << r << ": expected " << dim << " entries";
      format_error(path, msg.str());
    }
    for (std::size_t c = 0; c < dim; ++c) {
      std::ostringstream p;
      p << path << "[" << r << "][" << c << "]";
      m(r, c) = parse_complex(row[c], p.str());
    }
  }
  return m;
}

json dump_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(dump_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t parse_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
    format_error(key, "expected a positive integer");
  }
  return j[key].get<std::size_t>();
}

// Re-raise an invariant failure with the file location attached.
template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(path + ": " + e.what());
  }
}

}  // namespace

QracScheme scheme_from_json(const json& j) {
  if (!j.is_object()) format_error("$", "scheme document must be an object");
  const std::size_t n = parse_count(j, "n");
  const std::size_t m = parse_count(j, "m");
  if (n > 16 || m > 4) format_error("$", "n must be <= 16 and m <= 4");
  const std::size_t dim = std::size_t{1} << m;
  const std::size_t num_states = std::size_t{1} << n;
  const std::string label = j.value("label", std::string{});

  if (!j.contains("states") || !j["states"].is_object()) {
    format_error("states", "expected an object keyed by bitstring");
  }
  if (j["states"].size() != num_states) {
    std::ostringstream msg;
    msg << "expected " << num_states << " entries, got " << j["states"].size();
    format_error("states", msg.str());
  }
  std::vector<QracScheme::StateSpec> states;
  states.reserve(num_states);
  for (std::size_t x = 0; x < num_states; ++x) {
    const std::string bits = index_to_bits(x, n);
    const std::string path = "states/" + bits;
    if (!j["states"].contains(bits)) format_error(path, "missing state");
    const json& entry = j["states"][bits];
    if (entry.contains("amplitudes")) {
      const json& amps = entry["amplitudes"];
      if (!amps.is_array() || amps.size() != dim) {
        std::ostringstream msg;
        msg << "expected " << dim << " amplitudes";
        format_error(path + "/amplitudes", msg.str());
      }
      std::vector<Complex> a(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        std::ostringstream p;
        p << path << "/amplitudes[" << k << "]";
        a[k] = parse_complex(amps[k], p.str());
      }
      states.emplace_back(with_path(path, [&] { return PureState(std::move(a)); }));
    } else if (entry.contains("matrix")) {
      ComplexMatrix mat = parse_matrix(entry["matrix"], dim, path + "/matrix");
      states.emplace_back(with_path(path, [&] { return DensityMatrix(std::move(mat)); }));
    } else {
      format_error(path, "state needs either \"amplitudes\" or \"matrix\"");
    }
  }

  if (!j.contains("povms") || !j["povms"].is_array() || j["povms"].size() != n) {
    std::ostringstream msg;
    msg << "expected an array of " << n << " decoders";
    format_error("povms", msg.str());
  }
  std::vector<BinaryPovm> povms;
  povms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream p;
    p << "povms[" << i << "]";
    const json& entry = j["povms"][i];
    if (!entry.is_object() || !entry.contains("e0")) format_error(p.str(), "expected {\"e0\": matrix}");
    ComplexMatrix e0 = parse_matrix(entry["e0"], dim, p.str() + "/e0");
    povms.push_back(with_path(p.str(), [&] { return BinaryPovm::from_e0(std::move(e0)); }));
  }

  return with_path("$", [&] {
    return QracScheme(n, m, std::move(states), std::move(povms), label);
  });
}

json scheme_to_json(const QracScheme& scheme) {
  json j;
  j["label"] = scheme.label();
  j["n"] = scheme.n();
  j["m"] = scheme.m();
  json states = json::object();
  for (std::size_t x = 0; x < scheme.num_states(); ++x) {
    const std::string bits = index_to_bits(x, scheme.n());
    if (const auto& pure = scheme.pure_origin(x)) {
      json amps = json::array();
      for (const Complex& a : pure->amplitudes()) amps.push_back(dump_complex(a));
      states[bits] = json{{"amplitudes", std::move(amps)}};
    } else {
      states[bits] = json{{"matrix", dump_matrix(scheme.state(x).matrix())}};
    }
  }
  j["states"] = std::move(states);
  json povms = json::array();
  for (std::size_t i = 1; i <= scheme.n(); ++i) {
    povms.push_back(json{{"e0", dump_matrix(scheme.povm(i).e0())}});
  }
  j["povms"] = std::move(povms);
  return j;
}

QracScheme load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemeFormatError("cannot open scheme file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemeFormatError(std::string("JSON parse error: ") + e.what());
  }
  return scheme_from_json(j);
}

void save_scheme(const QracScheme& scheme, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path.string());
  out << scheme_to_json(scheme).dump(2) << "\n";
}

}  // namespace qrac
