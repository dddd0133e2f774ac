#include <json.hpp>

#include "pga/expr.hpp"

namespace pga::expr {

namespace {

using Json = nlohmann::ordered_json;

// Coprime integers, first nonzero entry positive.
template <std::size_t N>
std::array<Rational, N> canonical(std::array<Rational, N> v) {
  const Rational k = content(v);
  int lead = 0;
  for (const auto &x : v)
    if (!x.is_zero()) {
      lead = x.sign();
      break;
    }
  for (auto &x : v)
    x = x / k * Rational{lead};
  return v;
}

std::string words(const std::string &head, std::span<const Rational> v) {
  std::string s = "(" + head;
  for (const auto &x : v)
    s += " " + x.str();
  return s + ")";
}

Json strings(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(x.str());
  return a;
}

std::string line_text(const Line &l) {
  return words("line", canonical_line(l));
}

std::string text(const Value &v) {
  return std::visit(
      [](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>)
          return x.str();
        else if constexpr (std::is_same_v<T, bool>)
          return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, Point>) {
          if (is_ideal_point(x))
            return words("ideal-point",
                         canonical(std::array{x.x(), x.y()}));
          const Point n = normalize_point(x);
          return words("point", std::array{n.x(), n.y()});
        } else if constexpr (std::is_same_v<T, Line>)
          return line_text(x);
        else if constexpr (std::is_same_v<T, Multivector>)
          return "(mv " + x.str() + ")";
        else {
          if (x.parity() == Parity::Odd)
            return "(reflection " + line_text(x.first()) + ")";
          return "(rotor " + line_text(x.first()) + " " +
                 line_text(*x.second()) + ")";
        }
      },
      v);
}

Json structured(const Value &v) {
  return std::visit(
      [](const auto &x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, Rational>) {
          j["kind"] = "rational";
          j["value"] = x.str();
        } else if constexpr (std::is_same_v<T, bool>) {
          j["kind"] = "boolean";
          j["value"] = x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Point>) {
          j["kind"] = "point";
          j["ideal"] = is_ideal_point(x);
          if (is_ideal_point(x)) {
            j["value"] = strings(canonical(std::array{x.x(), x.y()}));
          } else {
            const Point n = normalize_point(x);
            j["value"] = strings(std::array{n.x(), n.y()});
          }
        } else if constexpr (std::is_same_v<T, Line>) {
          j["kind"] = "line";
          j["value"] = strings(canonical_line(x));
        } else if constexpr (std::is_same_v<T, Multivector>) {
          j["kind"] = "multivector";
          j["value"] = strings(x.coeffs());
        } else {
          j["kind"] = "versor";
          j["parity"] = x.parity() == Parity::Odd ? "odd" : "even";
          j["value"] = strings(x.mv().coeffs());
          Json gens = Json::array();
          gens.push_back(strings(canonical_line(x.first())));
          if (x.second())
            gens.push_back(strings(canonical_line(*x.second())));
          j["generators"] = gens;
        }
        return j;
      },
      v);
}

} // namespace

std::array<Rational, 3> canonical_line(const Line &l) {
  return canonical(std::array{l.a(), l.b(), l.c()});
}

std::string format_value(const Value &v, OutputMode mode) {
  return mode == OutputMode::Text ? text(v) : structured(v).dump();
}

std::string format_error(const std::exception &e, OutputMode mode,
                         std::optional<std::size_t> line) {
  if (mode == OutputMode::Structured) {
    Json j;
    j["kind"] = "error";
    if (const auto *err = dynamic_cast<const Error *>(&e))
      j["error"] = std::string(to_string(err->kind()));
    if (line)
      j["line"] = *line;
    j["detail"] = e.what();
    return j.dump();
  }
  std::string s = "error: ";
  if (line)
    s += "line " + std::to_string(*line) + ": ";
  return s + e.what();
}

EvalOutput eval_to_string(std::string_view source, OutputMode mode) {
  try {
    return {format_value(evaluate(source), mode), true};
  } catch (const Error &e) {
    return {format_error(e, mode), false};
  }
}

} // namespace pga::expr
