#include <cctype>
#include <numeric>

#include "vscif/solvers.hpp"

namespace vscif {

FillFactor::FillFactor(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator <= 0)
    raise(ErrorKind::Config, "fill factor must be a positive fraction");
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
  // 1/2 <= num/den <= 1
  if (2 * num_ < den_ || num_ > den_)
    raise(ErrorKind::Config, "fill factor " + to_string() + " outside [0.5, 1]");
}

FillFactor FillFactor::parse(std::string_view text) {
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  std::size_t i = 0;
  bool digits = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (whole > 1) raise(ErrorKind::Parse, "fill factor '" + std::string(text) + "' out of range");
    whole = whole * 10 + (text[i] - '0');
    digits = true;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (scale >= 1'000'000'000)
        raise(ErrorKind::Parse, "fill factor '" + std::string(text) + "' has too many digits");
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
      digits = true;
      ++i;
    }
  }
  if (!digits || i != text.size())
    raise(ErrorKind::Parse, "fill factor '" + std::string(text) + "' is not a decimal number");
  return FillFactor(whole * scale + frac, scale);
}

std::string FillFactor::to_string() const {
  // Exact decimal rendering when the denominator divides a power of ten.
  std::int64_t scale = 1;
  int places = 0;
  while (scale % den_ != 0 && places < 18) {
    scale *= 10;
    ++places;
  }
  if (scale % den_ != 0) return std::to_string(num_) + "/" + std::to_string(den_);
  const auto scaled = num_ * (scale / den_);
  std::string out = std::to_string(scaled / scale);
  if (places > 0) {
    auto frac = std::to_string(scaled % scale);
    out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  }
  return out;
}

SolveResult make_result(Packing packing, const Instance& instance) {
  SolveResult result;
  result.cost = total_cost(packing, instance);
  std::vector<int> fragments(instance.item_count(), 0);
  for (const auto& bin : packing.bins) {
    for (const auto& f : bin.contents) {
      if (f.parent >= 1 && static_cast<std::size_t>(f.parent) <= fragments.size())
        ++fragments[static_cast<std::size_t>(f.parent) - 1];
    }
  }
  result.cuts_used.resize(fragments.size());
  for (std::size_t i = 0; i < fragments.size(); ++i)
    result.cuts_used[i] = fragments[i] > 0 ? fragments[i] - 1 : 0;
  result.packing = std::move(packing);
  return result;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Ciffd: return "ciffd";
    case Algorithm::Cfff: return "cfff";
    case Algorithm::Cnfl: return "cnfl";
    case Algorithm::Cdnfl: return "cdnfl";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "ciffd") return Algorithm::Ciffd;
  if (text == "cfff") return Algorithm::Cfff;
  if (text == "cnfl") return Algorithm::Cnfl;
  if (text == "cdnfl") return Algorithm::Cdnfl;
  raise(ErrorKind::Parse, "unknown algorithm '" + std::string(text) + "'");
}

SolveResult solve(const Instance& instance, Algorithm algorithm, FillFactor f) {
  switch (algorithm) {
    case Algorithm::Ciffd: return solve_ciffd(instance);
    case Algorithm::Cfff: return solve_cfff(instance, f);
    case Algorithm::Cnfl: return solve_cnfl(instance);
    case Algorithm::Cdnfl: return solve_cdnfl(instance);
  }
  raise(ErrorKind::Precondition, "unknown algorithm");
}

}  // namespace vscif
