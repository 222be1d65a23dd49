#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qseries/identities.hpp"

namespace qseries {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::string_view case_id, std::uint64_t index) {
  std::uint64_t s = seed;
  state_ = splitmix(s) ^ fnv1a(case_id);
  state_ = splitmix(state_) ^ (index * 0xd1342543de82ef95ULL);
  splitmix(state_);
}

std::uint64_t SampleRng::next() { return splitmix(state_); }

Real SampleRng::uniform(Real lo, Real hi) {
  const Real u = static_cast<Real>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::int64_t SampleRng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Complex SampleRng::polar(Real lo, Real hi) {
  const Real r = uniform(lo, hi);
  const Real t = uniform(0, 2 * std::numbers::pi);
  return std::polar(r, t);
}

void Sample::set(std::string name, Complex v) { entries_.push_back({std::move(name), v, false}); }

void Sample::set_int(std::string name, std::int64_t v) {
  entries_.push_back({std::move(name), Complex(static_cast<Real>(v), 0), true});
}

const Sample::Entry& Sample::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw std::out_of_range("sample has no parameter " + std::string(name));
}

Complex Sample::c(std::string_view name) const { return find(name).value; }

std::int64_t Sample::i(std::string_view name) const {
  return static_cast<std::int64_t>(find(name).value.real());
}

}  // namespace qseries
