#include "chevcomm/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace chevcomm {

namespace {

std::uint64_t fnv1a(const std::uint8_t* p, std::size_t n, std::uint64_t h = 1469598103934665603ULL) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ElementSet::ElementSet(std::size_t width) : width_(width), slots_(1024, 0) {}

std::uint64_t ElementSet::hash(const std::uint8_t* key) const { return mix(fnv1a(key, width_)); }

bool ElementSet::contains(const std::uint8_t* key) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(key) & mask;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return false;
    if (std::memcmp(at(v - 1), key, width_) == 0) return true;
  }
}

bool ElementSet::insert(const std::uint8_t* key) {
  if (2 * (count_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(key) & mask;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) {
      arena_.insert(arena_.end(), key, key + width_);
      slots_[s] = static_cast<std::uint32_t>(++count_);
      return true;
    }
    if (std::memcmp(at(v - 1), key, width_) == 0) return false;
  }
}

void ElementSet::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash(at(i)) & mask;
    while (fresh[s] != 0) s = (s + 1) & mask;
    fresh[s] = static_cast<std::uint32_t>(i + 1);
  }
  slots_ = std::move(fresh);
}

std::vector<Mat> ElementSet::sorted() const {
  std::vector<Mat> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(get(i));
  std::sort(out.begin(), out.end());
  return out;
}

EnumeratedSubgroup::EnumeratedSubgroup(const MatrixSpace& space, ClosureOptions options)
    : space_(space), options_(std::move(options)), elements_(space.width()) {
  const Mat e = space_.identity();
  elements_.insert(e.data());
}

void EnumeratedSubgroup::check_level(const std::uint8_t* m) const {
  if (options_.level && !space_.reduces_to_identity(m, *options_.level)) {
    Mat bad(m, m + space_.width());
    throw CorrectnessError("enumeration escaped the congruence kernel of level " + options_.level->describe() +
                           ": " + space_.format(bad));
  }
}

bool EnumeratedSubgroup::add_generator(const GroupElem& g) {
  ++stats_.generators_offered;
  if (!complete_ || elements_.contains(g.mat.data())) return false;
  check_level(g.mat.data());
  gens_.push_back(g);
  watermark_.push_back(0);
  ++stats_.generators_kept;
  run();
  return true;
}

void EnumeratedSubgroup::add_generators(const std::vector<GroupElem>& gens) {
  for (const auto& g : gens) add_generator(g);
}

void EnumeratedSubgroup::run() {
  const std::size_t w = space_.width();
  std::vector<std::uint8_t> buffer;
  for (;;) {
    std::size_t gi = 0;
    for (std::size_t k = 1; k < gens_.size(); ++k) {
      if (watermark_[k] < watermark_[gi]) gi = k;
    }
    if (gens_.empty() || watermark_[gi] >= elements_.size()) return;

    const std::size_t begin = watermark_[gi];
    const std::size_t end = std::min(elements_.size(), begin + options_.batch);
    const std::size_t count = end - begin;
    buffer.resize(2 * count * w);
    const std::uint8_t* gm = gens_[gi].mat.data();
    const std::uint8_t* gv = gens_[gi].inv.data();
    const long long total = static_cast<long long>(2 * count);
#pragma omp parallel for schedule(static) if (options_.parallel && total > 256)
    for (long long t = 0; t < total; ++t) {
      const std::size_t k = static_cast<std::size_t>(t);
      space_.mul(k % 2 == 0 ? gm : gv, elements_.at(begin + k / 2), buffer.data() + k * w);
    }
    stats_.products += 2 * count;
    for (std::size_t k = 0; k < 2 * count; ++k) {
      const std::uint8_t* p = buffer.data() + k * w;
      if (elements_.contains(p)) continue;
      if (elements_.size() >= options_.budget) {
        complete_ = false;
        return;
      }
      check_level(p);
      elements_.insert(p);
    }
    watermark_[gi] = end;
  }
}

void EnumeratedSubgroup::normalize(const std::vector<GroupElem>& conjugators) {
  const std::size_t w = space_.width();
  const long long nc = static_cast<long long>(conjugators.size());
  std::vector<std::uint8_t> conj(conjugators.size() * w);
  std::vector<char> inside(conjugators.size());
  for (std::size_t gi = 0; gi < gens_.size() && complete_; ++gi) {
    const GroupElem g = gens_[gi];
#pragma omp parallel if (options_.parallel && nc > 16)
    {
      std::vector<std::uint8_t> tmp(w);
#pragma omp for schedule(static)
      for (long long k = 0; k < nc; ++k) {
        const auto& c = conjugators[static_cast<std::size_t>(k)];
        std::uint8_t* out = conj.data() + static_cast<std::size_t>(k) * w;
        space_.mul(c.mat.data(), g.mat.data(), tmp.data());
        space_.mul(tmp.data(), c.inv.data(), out);
        inside[static_cast<std::size_t>(k)] = elements_.contains(out) ? 1 : 0;
      }
    }
    for (std::size_t k = 0; k < conjugators.size(); ++k) {
      if (inside[k]) continue;
      const std::uint8_t* p = conj.data() + k * w;
      if (elements_.contains(p)) continue;
      const auto& c = conjugators[k];
      GroupElem h{Mat(p, p + w), space_.mul(space_.mul(c.mat, g.inv), c.inv)};
      add_generator(h);
      if (!complete_) return;
    }
  }
}

bool EnumeratedSubgroup::member(const Mat& m) const {
  if (!complete_) throw IncompleteSubgroupError("membership query on a partial enumeration");
  return elements_.contains(m.data());
}

bool EnumeratedSubgroup::subset_of(const EnumeratedSubgroup& other) const {
  if (!complete_ || !other.complete_) throw IncompleteSubgroupError("containment test on a partial enumeration");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!other.elements_.contains(elements_.at(i))) return false;
  }
  return true;
}

bool EnumeratedSubgroup::same_set(const EnumeratedSubgroup& other) const {
  return size() == other.size() && subset_of(other);
}

std::string EnumeratedSubgroup::generator_fingerprint() const {
  std::vector<Mat> g;
  for (const auto& x : gens_) g.push_back(x.mat);
  std::sort(g.begin(), g.end());
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& m : g) h = fnv1a(m.data(), m.size(), h);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

EnumeratedSubgroup closure(const MatrixSpace& space, const std::vector<GroupElem>& gens, ClosureOptions options) {
  EnumeratedSubgroup s(space, std::move(options));
  s.add_generators(gens);
  return s;
}

std::set<Mat> reference_closure(const MatrixSpace& space, const std::vector<GroupElem>& gens, std::size_t budget) {
  std::set<Mat> seen{space.identity()};
  std::deque<Mat> queue{space.identity()};
  while (!queue.empty()) {
    const Mat x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      for (const Mat* f : {&g.mat, &g.inv}) {
        Mat y = space.mul(*f, x);
        if (seen.insert(y).second) {
          if (seen.size() > budget) throw IncompleteSubgroupError("reference closure exceeded its budget");
          queue.push_back(std::move(y));
        }
      }
    }
  }
  return seen;
}

bool congruent(const MatrixSpace& space, const GroupElem& x, const GroupElem& y, const EnumeratedSubgroup& n) {
  return n.member(space.mul(x.mat, y.inv));
}

bool congruence_kernel_member(const MatrixSpace& space, const GroupElem& g, const Ideal& level) {
  return space.reduces_to_identity(g.mat, level);
}

void write_cache(const CacheContents& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << "chevcomm-subgroup-cache v1\n"
      << "ambient " << c.header.ambient << '\n'
      << "fingerprint " << c.header.fingerprint << '\n'
      << "complete " << (c.header.complete ? 1 : 0) << '\n'
      << "count " << c.elements.size() << '\n'
      << "width " << c.header.width << '\n'
      << "end\n";
  for (const auto& m : c.elements) {
    if (m.size() != c.header.width) throw std::invalid_argument("cache element of the wrong width");
    out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(m.size()));
  }
  if (!out) throw std::runtime_error("short write to cache file " + path);
}

void save_cache(const EnumeratedSubgroup& s, const std::string& ambient, const std::string& path) {
  CacheContents c;
  c.header = {ambient, s.generator_fingerprint(), s.complete(), s.size(), s.space().width()};
  c.elements = s.sorted_elements();
  write_cache(c, path);
}

CacheContents load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read cache file " + path);
  CacheContents out;
  std::string line;
  std::getline(in, line);
  if (line != "chevcomm-subgroup-cache v1") throw std::runtime_error(path + " is not a subgroup cache");
  while (std::getline(in, line) && line != "end") {
    const auto sp = line.find(' ');
    const std::string key = line.substr(0, sp);
    const std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (key == "ambient") out.header.ambient = value;
    else if (key == "fingerprint") out.header.fingerprint = value;
    else if (key == "complete") out.header.complete = value == "1";
    else if (key == "count") out.header.count = std::stoull(value);
    else if (key == "width") out.header.width = std::stoull(value);
    else throw std::runtime_error("unknown cache header field '" + key + "'");
  }
  if (line != "end" || out.header.width == 0) throw std::runtime_error("truncated cache header in " + path);
  for (std::size_t i = 0; i < out.header.count; ++i) {
    Mat m(out.header.width);
    in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(m.size()));
    if (!in) throw std::runtime_error("truncated cache body in " + path);
    out.elements.push_back(std::move(m));
  }
  return out;
}

}  // namespace chevcomm
