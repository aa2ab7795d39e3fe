#include "vemec/channel.hpp"

#include <cmath>
#include <cstring>
#include <random>

#include "vemec/errors.hpp"

namespace vemec {

namespace {

void fnv1a(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

std::uint64_t channel_digest(const ChannelSet& ch) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  fnv1a(&h, &ch.K, sizeof(ch.K));
  fnv1a(&h, &ch.N, sizeof(ch.N));
  for (const auto& row : ch.h_up) fnv1a(&h, row.data(), row.size() * sizeof(double));
  for (const auto& row : ch.h_down) fnv1a(&h, row.data(), row.size() * sizeof(double));
  fnv1a(&h, ch.h_an.data(), ch.h_an.size() * sizeof(std::complex<double>));
  return h;
}

ChannelSet make_channel_set(std::vector<std::vector<double>> h_up,
                            std::vector<std::vector<double>> h_down,
                            std::vector<std::complex<double>> h_an) {
  ChannelSet ch;
  ch.K = static_cast<int>(h_up.size());
  ch.N = ch.K > 0 ? static_cast<int>(h_up[0].size()) : 0;
  if (h_down.size() != h_up.size())
    throw ConfigError("make_channel_set: h_up/h_down vehicle counts differ");
  for (const auto& row : h_up)
    if (static_cast<int>(row.size()) != ch.N)
      throw ConfigError("make_channel_set: ragged h_up");
  for (const auto& row : h_down)
    if (static_cast<int>(row.size()) != ch.N)
      throw ConfigError("make_channel_set: ragged h_down");
  if (h_an.size() != static_cast<std::size_t>(ch.N) * static_cast<std::size_t>(ch.N))
    throw ConfigError("make_channel_set: h_an must be N x N");

  ch.h_up = std::move(h_up);
  ch.h_down = std::move(h_down);
  ch.h_an = std::move(h_an);

  ch.g_up.resize(ch.K);
  ch.g_down.resize(ch.K);
  for (int i = 0; i < ch.K; ++i) {
    ch.g_up[i] = norm2(ch.h_up[i]);
    ch.g_down[i] = norm2(ch.h_down[i]);
  }
  ch.g_si = 0.0;
  for (const auto& z : ch.h_an) ch.g_si += std::norm(z);
  ch.digest = channel_digest(ch);
  return ch;
}

ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t trial_index) {
  if (cfg.K < 1 || cfg.N < 1)
    throw ConfigError("generate_channels: K and N must be >= 1");

  std::seed_seq seq{
      static_cast<std::uint32_t>(cfg.seed & 0xffffffffu),
      static_cast<std::uint32_t>(cfg.seed >> 32),
      static_cast<std::uint32_t>(trial_index & 0xffffffffu),
      static_cast<std::uint32_t>(trial_index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uni(0.5, 1.0);
  // Total complex variance 0.1 -> 0.05 per real component.
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.05));

  const int K = cfg.K;
  const int N = cfg.N;
  std::vector<std::vector<double>> h_up(K, std::vector<double>(N));
  std::vector<std::vector<double>> h_down(K, std::vector<double>(N));
  std::vector<std::complex<double>> h_an(static_cast<std::size_t>(N) * N);

  for (int i = 0; i < K; ++i)
    for (int n = 0; n < N; ++n) h_up[i][n] = uni(rng);
  for (int i = 0; i < K; ++i)
    for (int n = 0; n < N; ++n) h_down[i][n] = uni(rng);
  for (auto& z : h_an) {
    double re = gauss(rng);
    double im = gauss(rng);
    z = {re, im};
  }

  return make_channel_set(std::move(h_up), std::move(h_down), std::move(h_an));
}

}  // namespace vemec
