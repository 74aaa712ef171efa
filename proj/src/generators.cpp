#include "dtm/generators.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "dtm/error.hpp"
#include "dtm/random.hpp"

namespace dtm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_spec, what); }

std::string number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<double> draw(const GeneratorKind& kind, std::size_t n, RngSeed seed);

template <class Draw>
std::vector<double> iid(std::size_t n, RngSeed seed, Draw one) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = one(rng);
  return out;
}

std::vector<double> ar1(double m, std::size_t n, RngSeed seed) {
  if (m == 0.0) return iid(n, seed, [](Rng& r) { return standard_normal(r); });
  Rng rng(seed);
  const double rho = std::exp(-1.0 / m);
  const double innovation = std::sqrt(-std::expm1(-2.0 / m));
  double s = standard_normal(rng);
  const auto burn_in = static_cast<std::size_t>(std::ceil(10.0 * m));
  for (std::size_t t = 0; t < burn_in; ++t) s = rho * s + innovation * standard_normal(rng);
  std::vector<double> out(n);
  out[0] = s;
  for (std::size_t t = 1; t < n; ++t) out[t] = rho * out[t - 1] + innovation * standard_normal(rng);
  return out;
}

std::vector<double> sliding_mean(const MovingAverage& ma, std::size_t n, RngSeed seed) {
  const std::size_t w = ma.window;
  const auto base = draw(ma.base, n + w - 1, seed);
  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    double sum = 0.0;
    for (std::size_t j = 0; j < w; ++j) sum += base[t + j];
    out[t] = sum / static_cast<double>(w);
  }
  return out;
}

std::vector<double> draw(const GeneratorKind& kind, std::size_t n, RngSeed seed) {
  return std::visit(
      overloaded{
          [&](const BetaDist& d) {
            return iid(n, seed, [&](Rng& r) { return beta_variate(r, d.a, d.b); });
          },
          [&](const ChiSquareDist& d) {
            return iid(n, seed, [&](Rng& r) { return chi_square_variate(r, d.df); });
          },
          [&](const StudentTDist& d) {
            return iid(n, seed, [&](Rng& r) { return student_t_variate(r, d.df); });
          },
          [&](const ParetoDist& d) {
            return iid(n, seed, [&](Rng& r) { return pareto_variate(r, d.tail); });
          },
          [&](const GaussianAr1& d) { return ar1(d.m, n, seed); },
          [&](const std::shared_ptr<const MovingAverage>& ma) { return sliding_mean(*ma, n, seed); },
      },
      kind);
}

// Recursive-descent parser for `name(arg, ...)`.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GeneratorKind parse() {
    auto kind = generator();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return kind;
  }

 private:
  GeneratorKind generator() {
    const std::string name = identifier();
    expect('(');
    GeneratorKind kind;
    if (name == "moving_average") {
      auto base = generator();
      expect(',');
      const double w = num();
      if (w < 1 || w != std::floor(w)) fail("window must be a positive integer");
      kind = moving_average(std::move(base), static_cast<std::size_t>(w));
    } else if (name == "beta") {
      const double a = num();
      expect(',');
      kind = BetaDist{a, num()};
    } else if (name == "chi_square") {
      kind = ChiSquareDist{num()};
    } else if (name == "student_t") {
      kind = StudentTDist{num()};
    } else if (name == "pareto") {
      kind = ParetoDist{num()};
    } else if (name == "gaussian_ar1") {
      kind = GaussianAr1{num()};
    } else {
      fail("unknown generator '" + name + "'");
    }
    expect(')');
    return kind;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a generator name");
    return text_.substr(start, pos_ - start);
  }

  double num() {
    skip_ws();
    double v = 0.0;
    auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (res.ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    bad("generator spec '" + text_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorKind moving_average(GeneratorKind base, std::size_t window) {
  return std::make_shared<const MovingAverage>(MovingAverage{std::move(base), window});
}

void validate(const GeneratorKind& kind) {
  std::visit(overloaded{
                 [](const BetaDist& d) {
                   if (!(d.a > 0.0 && d.b > 0.0)) bad("beta parameters must be positive");
                 },
                 [](const ChiSquareDist& d) {
                   if (!(d.df >= 1.0) || !std::isfinite(d.df)) bad("chi_square df must be >= 1");
                 },
                 [](const StudentTDist& d) {
                   if (!(d.df >= 1.0) || !std::isfinite(d.df)) bad("student_t df must be >= 1");
                 },
                 [](const ParetoDist& d) {
                   if (!(d.tail > 0.0) || !std::isfinite(d.tail)) bad("pareto tail must be positive");
                 },
                 [](const GaussianAr1& d) {
                   if (!(d.m >= 0.0) || !std::isfinite(d.m)) bad("gaussian_ar1 m must be >= 0");
                 },
                 [](const std::shared_ptr<const MovingAverage>& ma) {
                   if (!ma) bad("moving_average without a base");
                   if (ma->window < 1) bad("moving_average window must be >= 1");
                   validate(ma->base);
                 },
             },
             kind);
}

void validate(const GeneratorSpec& spec) {
  validate(spec.kind);
  if (spec.n < 1) bad("generator length n must be >= 1");
}

Series generate(const GeneratorSpec& spec) {
  validate(spec);
  return Series(draw(spec.kind, spec.n, spec.seed));
}

std::string describe(const GeneratorKind& kind) {
  return std::visit(
      overloaded{
          [](const BetaDist& d) { return "beta(" + number(d.a) + "," + number(d.b) + ")"; },
          [](const ChiSquareDist& d) { return "chi_square(" + number(d.df) + ")"; },
          [](const StudentTDist& d) { return "student_t(" + number(d.df) + ")"; },
          [](const ParetoDist& d) { return "pareto(" + number(d.tail) + ")"; },
          [](const GaussianAr1& d) { return "gaussian_ar1(" + number(d.m) + ")"; },
          [](const std::shared_ptr<const MovingAverage>& ma) {
            return "moving_average(" + describe(ma->base) + "," + std::to_string(ma->window) + ")";
          },
      },
      kind);
}

GeneratorKind parse_generator(const std::string& text) {
  auto kind = Parser(text).parse();
  validate(kind);
  return kind;
}

bool same_kind(const GeneratorKind& a, const GeneratorKind& b) { return describe(a) == describe(b); }

}  // namespace dtm
