#include "quatrange/quat_nr.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace quatrange {

namespace {

constexpr std::int64_t kChunk = 4096;

void fill_chunk(const QMatrix& A, std::uint64_t chunk_seed, std::int64_t begin,
                std::int64_t end, std::vector<Quaternion>& out) {
  GaussianStream stream(chunk_seed);
  const int n = A.dim();
  for (std::int64_t d = begin; d < end; ++d)
    out[static_cast<std::size_t>(d)] = quadratic_form(A, draw_unit_vector(stream, n));
}

}  // namespace

SampleCloud sample(const QMatrix& A, std::int64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  SampleCloud cloud;
  cloud.n = A.dim();
  cloud.count = count;
  cloud.seed = seed;
  cloud.points.resize(static_cast<std::size_t>(count));

  // Chunking is fixed by kChunk alone, so the cloud is byte-identical no
  // matter how many workers run: chunk c draws from a stream seeded seed + c
  // and fills slots [c*kChunk, (c+1)*kChunk).
  const std::int64_t chunks = (count + kChunk - 1) / kChunk;
  auto run_chunk = [&](std::int64_t c) {
    fill_chunk(A, seed + static_cast<std::uint64_t>(c), c * kChunk,
               std::min(count, (c + 1) * kChunk), cloud.points);
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::int64_t>(chunks, hw));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
    return cloud;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
        run_chunk(c);
    });
  }
  for (auto& t : pool) t.join();
  return cloud;
}

std::vector<Quaternion> cloud_draw(int n, std::int64_t index, std::uint64_t seed) {
  if (index < 0) throw std::invalid_argument("draw index must be >= 0");
  const std::int64_t chunk = index / kChunk;
  GaussianStream stream(seed + static_cast<std::uint64_t>(chunk));
  std::vector<Quaternion> x;
  for (std::int64_t d = chunk * kChunk; d <= index; ++d)
    x = draw_unit_vector(stream, n);
  return x;
}

NRApprox bild_real(const QMatrix& A, int angles) {
  if (A.field() != Field::Real)
    throw std::invalid_argument("bild_real requires a real matrix");
  return boundary(A, angles);
}

bool member_real(const QMatrix& A, const Quaternion& q, int angles, double tol) {
  // The swept region is inscribed in the exact set, so genuine members can
  // miss it by up to the sweep error; fold that into the tolerance.
  const NRApprox bild = bild_real(A, angles);
  return bild.region.contains(canonical_rep(q), tol + bild.max_support_error);
}

std::vector<std::complex<double>> upper_bild_points(const SampleCloud& cloud) {
  std::vector<std::complex<double>> reps;
  reps.reserve(cloud.points.size());
  for (const Quaternion& w : cloud.points) reps.push_back(canonical_rep(w));
  return reps;
}

}  // namespace quatrange
