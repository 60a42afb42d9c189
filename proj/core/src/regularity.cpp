#include "symreg/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "symreg/errors.hpp"
#include "symreg/gfp.hpp"

namespace symreg {

std::string RegularityCertificate::to_json_string() const {
    nlohmann::json j;
    j["a"] = a.v;
    j["i"] = i;
    j["face"] = face;
    j["value"] = value;
    j["char"] = field_char;
    return j.dump();
}

SimplicialComplex degree_complex(const MonomialIdeal& I, const Exponent& a) {
    int n = I.ambient();
    if (a.size() != n) throw DimensionMismatch("exponent length mismatch in degree complex");
    if (n > 20) throw Error("explicit face enumeration is limited to n <= 20");
    std::uint32_t neg_mask = 0;
    for (int j = 0; j < n; ++j)
        if (a.v[j] < 0) neg_mask |= (1u << j);
    std::vector<std::vector<int>> faces;
    std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
    // iterate F over supersets of G_a
    std::uint32_t free_mask = full & ~neg_mask;
    std::uint32_t sub = free_mask;
    while (true) {
        std::uint32_t F = sub | neg_mask;
        bool ok = true;
        for (const auto& g : I.gens()) {
            bool witness = false;
            for (int j = 0; j < n; ++j) {
                if ((F >> j) & 1) continue;
                if (a.v[j] < g.a.v[j]) {
                    witness = true;
                    break;
                }
            }
            if (!witness) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> face;
            std::uint32_t fm = F & ~neg_mask;
            for (int j = 0; j < n; ++j)
                if ((fm >> j) & 1) face.push_back(j + 1);
            faces.push_back(std::move(face));
        }
        if (sub == 0) break;
        sub = (sub - 1) & free_mask;
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

GammaRange::GammaRange(std::vector<int> rho) : limits_(std::move(rho)) {
    for (int& r : limits_) r = std::max(r, 1);
}

GammaRange::iterator::iterator(const std::vector<int>* limits, bool at_end)
    : limits_(limits), done_(at_end) {
    if (!done_) current_ = Exponent::zeros(static_cast<int>(limits->size()));
}

GammaRange::iterator& GammaRange::iterator::operator++() {
    // odometer with the last coordinate fastest
    for (int j = static_cast<int>(current_.v.size()) - 1; j >= 0; --j) {
        if (current_.v[j] + 1 < (*limits_)[j]) {
            ++current_.v[j];
            return *this;
        }
        current_.v[j] = 0;
    }
    done_ = true;
    return *this;
}

std::size_t GammaRange::size() const {
    std::size_t s = 1;
    for (int r : limits_) s *= static_cast<std::size_t>(r);
    return s;
}

GammaRange gamma_exponents(const MonomialIdeal& I) {
    if (!I.is_proper()) throw Error("gamma box requires a proper nonzero ideal");
    return GammaRange(I.rho());
}

// ---------------------------------------------------------------------------
// Takayama-style sweep machinery.  Everything below works on support
// bitmasks; the public SimplicialComplex type only appears at the API edge.
// ---------------------------------------------------------------------------

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Cache of link homologies keyed by (p, vertex-compressed face list).
class HomologyCache {
public:
    std::vector<int> get(std::vector<std::uint32_t> key, int p) {
        key.push_back(static_cast<std::uint32_t>(p));
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        std::vector<std::uint32_t> faces(key.begin(), key.end() - 1);
        std::vector<int> dims = homology_of_face_masks(faces, p);
        std::lock_guard<std::mutex> lock(mu_);
        if (map_.size() >= kMaxEntries) map_.clear();
        map_.emplace(std::move(key), dims);
        return dims;
    }

    static constexpr std::size_t kMaxEntries = 1 << 22;

private:
    std::unordered_map<std::vector<std::uint32_t>, std::vector<int>, VecHash> map_;
    std::mutex mu_;
};

HomologyCache g_homology_cache;

/// Compresses face masks onto the vertices they actually use, preserving
/// vertex order, so that equal complexes hash identically.
std::vector<std::uint32_t> compress_faces(const std::vector<std::uint32_t>& faces) {
    std::uint32_t used = 0;
    for (std::uint32_t f : faces) used |= f;
    std::array<int, 32> slot{};
    int k = 0;
    for (int j = 0; j < 32; ++j)
        if ((used >> j) & 1) slot[j] = k++;
    std::vector<std::uint32_t> out;
    out.reserve(faces.size());
    for (std::uint32_t f : faces) {
        std::uint32_t c = 0;
        std::uint32_t bits = f;
        while (bits) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            c |= (1u << slot[j]);
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Quotient supports {j : g_j > a_j} of all generators, deduplicated and
/// minimalized under inclusion.  Returns false when some quotient is empty,
/// i.e. x^a lies in the ideal.
bool sqf_colon_masks(const std::vector<std::vector<int>>& gens, const std::vector<int>& a,
                     std::vector<std::uint32_t>& out) {
    out.clear();
    const int n = static_cast<int>(a.size());
    for (const auto& g : gens) {
        std::uint32_t m = 0;
        for (int j = 0; j < n; ++j)
            if (g[j] > a[j]) m |= (1u << j);
        if (m == 0) return false;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        if (px != py) return px < py;
        return x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < kept && !dominated; ++j)
            if ((out[j] & ~out[i]) == 0) dominated = true;
        if (!dominated) out[kept++] = out[i];
    }
    out.resize(kept);
    return true;
}

/// All faces of the complex on vertex mask U whose minimal non-faces are
/// `gen_masks`; ascending mask order.
std::vector<std::uint32_t> enumerate_faces(std::uint32_t U,
                                           const std::vector<std::uint32_t>& gen_masks) {
    std::vector<std::uint32_t> faces;
    std::uint32_t sub = U;
    while (true) {
        bool face = true;
        for (std::uint32_t gm : gen_masks) {
            if ((gm & ~sub) == 0) {
                face = false;
                break;
            }
        }
        if (face) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & U;
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

/// Apex mask of a complex given as a sorted face list: vertices lying in
/// every facet.  Nonzero apex means the complex is a cone, hence acyclic.
std::uint32_t apex_mask(const std::vector<std::uint32_t>& faces) {
    std::uint32_t used = 0;
    for (std::uint32_t f : faces) used |= f;
    if (used == 0) return 0;
    std::uint32_t apex = used;
    for (std::uint32_t f : faces) {
        // facet test: no single-vertex extension stays a face
        bool facet = true;
        std::uint32_t missing = used & ~f;
        while (missing) {
            std::uint32_t bit = missing & (-missing);
            missing &= missing - 1;
            if (std::binary_search(faces.begin(), faces.end(), f | bit)) {
                facet = false;
                break;
            }
        }
        if (facet) {
            apex &= f;
            if (apex == 0) return 0;
        }
    }
    return apex;
}

struct SweepCandidate {
    int value;
    std::vector<int> a;
    int i;
    std::uint32_t face_mask;
};

struct SweepConfig {
    bool respect_supp_constraint;  // true for reg, false for the upper bound
    bool collect;
    int prime;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Shared core of reg_takayama and upper_bound_scan: sweeps the gamma box of
/// I and reports max(|a| + i) over nonvanishing link homologies, with the
/// face constraint F ∩ supp(a) = ∅ switchable.
class TakayamaSweep {
public:
    TakayamaSweep(const MonomialIdeal& I, const SweepConfig& cfg) : cfg_(cfg) {
        n_ = I.ambient();
        if (n_ > 20) throw Error("explicit face enumeration is limited to n <= 20");
        if (!I.is_proper()) throw Error("regularity sweep requires a proper nonzero ideal");
        if (!is_prime(cfg.prime)) throw Error("regularity requires a prime field characteristic");
        for (const auto& g : I.gens()) gens_.push_back(g.a.v);
        limits_ = I.rho();
        for (int& r : limits_) r = std::max(r, 1);
        box_size_ = 1;
        for (int r : limits_) box_size_ *= static_cast<std::size_t>(r);
        full_mask_ = (1u << n_) - 1;
        // seed: reg(S/I) >= t_1 - 1 = maxdeg - 1.  The unconstrained
        // upper-bound sweep must not assume its target dominates reg.
        best_.store(cfg.respect_supp_constraint ? I.max_generator_degree() - 1 : 0);
    }

    void run(int threads) {
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back([this] { worker(); });
            for (auto& t : pool) t.join();
        }
        if (timed_out_.load()) throw TimeoutError("regularity sweep exceeded its deadline");
    }

    int best() const { return best_.load(); }

    std::vector<SweepCandidate> take_candidates() { return std::move(candidates_); }

private:
    void decode(std::size_t idx, std::vector<int>& a) const {
        for (int j = n_ - 1; j >= 0; --j) {
            a[j] = static_cast<int>(idx % limits_[j]);
            idx /= limits_[j];
        }
    }

    void worker() {
        std::vector<int> a(n_);
        std::vector<std::uint32_t> colon, faces, link_faces;
        std::vector<SweepCandidate> local;
        while (true) {
            std::size_t start = next_.fetch_add(kBlock);
            if (start >= box_size_ || timed_out_.load()) break;
            std::size_t stop = std::min(start + kBlock, box_size_);
            for (std::size_t idx = start; idx < stop; ++idx) {
                if (cfg_.deadline && std::chrono::steady_clock::now() > *cfg_.deadline) {
                    timed_out_.store(true);
                    return;
                }
                decode(idx, a);
                sweep_exponent(a, colon, faces, link_faces, local);
            }
        }
        if (!local.empty()) {
            std::lock_guard<std::mutex> lock(mu_);
            candidates_.insert(candidates_.end(), local.begin(), local.end());
        }
    }

    void sweep_exponent(const std::vector<int>& a, std::vector<std::uint32_t>& colon,
                        std::vector<std::uint32_t>& faces, std::vector<std::uint32_t>& link_faces,
                        std::vector<SweepCandidate>& local) {
        if (!sqf_colon_masks(gens_, a, colon)) return;  // x^a in I: void complex
        std::uint32_t U = 0;
        for (std::uint32_t m : colon) U |= m;
        std::uint32_t apexes = full_mask_ & ~U;
        std::uint32_t supp_a = 0;
        int deg_a = 0;
        for (int j = 0; j < n_; ++j) {
            if (a[j] != 0) supp_a |= (1u << j);
            deg_a += a[j];
        }
        if (cfg_.respect_supp_constraint && (apexes & supp_a)) return;  // all links are cones
        faces = enumerate_faces(U, colon);
        int u_count = std::popcount(U);
        for (std::uint32_t f0 : faces) {
            if (cfg_.respect_supp_constraint && (f0 & supp_a)) continue;
            if (deg_a + u_count - std::popcount(f0) < best_.load(std::memory_order_relaxed))
                continue;  // even the top homology degree cannot reach the best
            link_faces.clear();
            int max_card = 0;
            for (std::uint32_t h : faces) {
                if ((f0 & ~h) == 0) {
                    std::uint32_t g = h & ~f0;
                    link_faces.push_back(g);
                    max_card = std::max(max_card, std::popcount(g));
                }
            }
            if (deg_a + max_card < best_.load(std::memory_order_relaxed)) continue;
            if (apex_mask(link_faces)) continue;  // cone, acyclic
            std::vector<int> dims = g_homology_cache.get(compress_faces(link_faces), cfg_.prime);
            for (int c = 0; c < static_cast<int>(dims.size()); ++c) {
                if (dims[c] == 0) continue;
                int value = deg_a + c;
                int cur = best_.load(std::memory_order_relaxed);
                while (value > cur && !best_.compare_exchange_weak(cur, value)) {
                }
                if (cfg_.collect && value >= cur) {
                    local.push_back(SweepCandidate{value, a, c, f0 | apexes});
                }
            }
        }
    }

    static constexpr std::size_t kBlock = 16;

    SweepConfig cfg_;
    int n_ = 0;
    std::vector<std::vector<int>> gens_;
    std::vector<int> limits_;
    std::size_t box_size_ = 0;
    std::uint32_t full_mask_ = 0;
    std::atomic<std::size_t> next_{0};
    std::atomic<int> best_{0};
    std::atomic<bool> timed_out_{false};
    std::mutex mu_;
    std::vector<SweepCandidate> candidates_;
};

std::vector<int> mask_to_vertices(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        int j = std::countr_zero(m);
        m &= m - 1;
        out.push_back(j + 1);
    }
    return out;
}

}  // namespace

RegResult reg_takayama(const MonomialIdeal& I, const RegOptions& opts) {
    SweepConfig cfg{true, opts.collect_certificates, opts.prime, opts.deadline};
    TakayamaSweep sweep(I, cfg);
    sweep.run(opts.threads);
    RegResult result;
    result.reg_quotient = sweep.best();
    result.field_char = opts.prime;
    if (opts.collect_certificates) {
        auto cands = sweep.take_candidates();
        for (auto& c : cands) {
            if (c.value != result.reg_quotient) continue;
            RegularityCertificate cert;
            cert.a = Exponent(c.a);
            cert.i = c.i;
            cert.face = mask_to_vertices(c.face_mask);
            cert.value = c.value;
            cert.field_char = opts.prime;
            result.certificates.push_back(std::move(cert));
        }
        std::sort(result.certificates.begin(), result.certificates.end(),
                  [](const RegularityCertificate& x, const RegularityCertificate& y) {
                      int dx = x.a.degree(), dy = y.a.degree();
                      if (dx != dy) return dx < dy;
                      if (x.a.v != y.a.v) return x.a.v < y.a.v;
                      if (x.i != y.i) return x.i < y.i;
                      return x.face < y.face;
                  });
        result.certificates.erase(
            std::unique(result.certificates.begin(), result.certificates.end(),
                        [](const RegularityCertificate& x, const RegularityCertificate& y) {
                            return x.a == y.a && x.i == y.i && x.face == y.face;
                        }),
            result.certificates.end());
    }
    return result;
}

int upper_bound_scan(const MonomialIdeal& I, int p) {
    SweepConfig cfg{false, false, p, std::nullopt};
    TakayamaSweep sweep(I, cfg);
    sweep.run(1);
    return sweep.best();
}

// ---------------------------------------------------------------------------
// Koszul/Betti oracle.
// ---------------------------------------------------------------------------

namespace {

struct BettiBox {
    int n;
    std::vector<int> radix;          // rho_j + 1
    std::vector<std::size_t> stride;
    std::size_t size = 1;

    explicit BettiBox(const std::vector<int>& rho) : n(static_cast<int>(rho.size())) {
        radix.resize(n);
        stride.resize(n);
        for (int j = n - 1; j >= 0; --j) {
            radix[j] = rho[j] + 1;
            stride[j] = size;
            size *= static_cast<std::size_t>(radix[j]);
        }
        if (size > (std::size_t{1} << 27))
            throw Error("generator degrees exceed the supported Betti box size");
    }
};

}  // namespace

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [ij, dim] : entries)
        if (dim != 0) r = std::max(r, ij.second - ij.first);
    return r;
}

std::string BettiTable::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ij, dim] : entries)
        if (dim != 0) arr.push_back({ij.first, ij.second, dim});
    nlohmann::json j;
    j["entries"] = arr;
    j["char"] = field_char;
    j["max_degree"] = max_degree;
    j["regularity"] = regularity();
    return j.dump();
}

BettiTable betti_oracle(const MonomialIdeal& I, int p, int max_degree) {
    if (!I.is_proper()) throw Error("Betti oracle requires a proper nonzero ideal");
    if (!is_prime(p)) throw Error("Betti oracle requires a prime field characteristic");
    if (max_degree < 0) throw Error("max_degree must be nonnegative");
    const int n = I.ambient();
    std::vector<int> rho = I.rho();
    BettiBox box(rho);
    long long sigma = 0;  // total degree of the lcm of all generators
    for (int r : rho) sigma += r;

    // membership in I over the whole box, by upward closure of the generators
    std::vector<char> member(box.size, 0);
    for (const auto& g : I.gens()) {
        std::size_t idx = 0;
        for (int j = 0; j < n; ++j) idx += box.stride[j] * static_cast<std::size_t>(g.a.v[j]);
        member[idx] = 1;
    }
    {
        std::vector<int> b(n, 0);
        for (std::size_t idx = 0; idx < box.size; ++idx) {
            if (!member[idx]) {
                for (int j = 0; j < n; ++j) {
                    if (b[j] > 0 && member[idx - box.stride[j]]) {
                        member[idx] = 1;
                        break;
                    }
                }
            }
            // odometer (last coordinate fastest)
            for (int j = n - 1; j >= 0; --j) {
                if (++b[j] < box.radix[j]) break;
                b[j] = 0;
            }
        }
    }

    BettiTable table;
    table.field_char = p;
    table.max_degree = max_degree;

    std::vector<int> b(n, 0);
    std::vector<char> present(std::size_t{1} << n, 0);
    for (std::size_t idx = 0; idx < box.size; ++idx) {
        int total = 0;
        for (int j = 0; j < n; ++j) total += b[j];
        if (total <= max_degree && (idx == 0 || member[idx])) {
            // strand of the Koszul complex in multidegree b
            std::uint32_t supp = 0;
            for (int j = 0; j < n; ++j)
                if (b[j] > 0) supp |= (1u << j);
            int k = std::popcount(supp);
            std::array<int, 32> vars{};
            {
                int t = 0;
                std::uint32_t bits = supp;
                while (bits) {
                    vars[t++] = std::countr_zero(bits);
                    bits &= bits - 1;
                }
            }
            // present[T]: x^{b - chi_T} not in I
            std::vector<std::vector<std::uint32_t>> by_card(k + 1);
            for (std::uint32_t T = 0; T < (1u << k); ++T) {
                std::size_t q = idx;
                for (int t = 0; t < k; ++t)
                    if ((T >> t) & 1) q -= box.stride[vars[t]];
                present[T] = (q == 0) ? 1 : !member[q];
                if (present[T]) by_card[std::popcount(T)].push_back(T);
            }
            std::vector<int> rank(k + 2, 0);
            for (int c = 1; c <= k; ++c) {
                if (by_card[c].empty() || by_card[c - 1].empty()) continue;
                GfpMatrix m(static_cast<int>(by_card[c - 1].size()),
                            static_cast<int>(by_card[c].size()));
                for (int col = 0; col < static_cast<int>(by_card[c].size()); ++col) {
                    std::uint32_t T = by_card[c][col];
                    int sign = 1;
                    for (std::uint32_t bits = T; bits;) {
                        std::uint32_t low = bits & (bits - 1);
                        std::uint32_t sub = T ^ (bits ^ low);
                        if (present[sub]) {
                            auto& bucket = by_card[c - 1];
                            int row = static_cast<int>(
                                std::lower_bound(bucket.begin(), bucket.end(), sub) -
                                bucket.begin());
                            m.at(row, col) = sign;
                        }
                        sign = -sign;
                        bits = low;
                    }
                }
                rank[c] = gfp_rank(std::move(m), p);
            }
            for (int c = 0; c <= k; ++c) {
                int beta = static_cast<int>(by_card[c].size()) - rank[c] - rank[c + 1];
                if (beta != 0) table.entries[{c, total}] += beta;
            }
        }
        for (int j = n - 1; j >= 0; --j) {
            if (++b[j] < box.radix[j]) break;
            b[j] = 0;
        }
    }

    if (sigma > max_degree) {
        for (const auto& [ij, dim] : table.entries) {
            if (ij.second == max_degree && dim != 0)
                throw TruncationError(
                    "nonzero Betti strand at the degree cap; increase max_degree");
        }
    }
    return table;
}

int betti_regularity(const MonomialIdeal& I, int p) {
    long long sigma = 0;
    for (int r : I.rho()) sigma += r;
    int fallback = I.ambient() + 2 * I.max_generator_degree();
    // sigma bounds every Betti degree, so this call cannot truncate
    return betti_oracle(I, p, std::max<int>(fallback, static_cast<int>(sigma))).regularity();
}

bool verify_certificate(const MonomialIdeal& I, const RegularityCertificate& cert,
                        int reg_quotient) {
    if (cert.a.size() != I.ambient()) return false;
    if (!cert.a.is_nonnegative()) return false;
    if (cert.value != reg_quotient || cert.value != cert.a.degree() + cert.i) return false;
    SimplicialComplex D = degree_complex(I, cert.a);
    if (!D.contains_face(cert.face)) return false;
    std::vector<int> supp = cert.a.support();
    for (int v : cert.face)
        if (std::binary_search(supp.begin(), supp.end(), v)) return false;
    HomologyProfile prof = reduced_homology(link(D, cert.face), cert.field_char);
    return prof.dim(cert.i - 1) != 0;
}

bool red0_check(const MonomialIdeal& I, const RegularityCertificate& cert, int p) {
    RegOptions opts;
    opts.prime = p;
    opts.collect_certificates = false;
    int r = reg_takayama(I, opts).reg_quotient;
    if (!verify_certificate(I, cert, r)) throw Error("invalid regularity certificate");
    MonomialIdeal J = radical_colon(I, cert.a);
    std::vector<int> supp = cert.a.support();
    for (int t = 1; t <= I.ambient(); ++t) {
        if (std::binary_search(supp.begin(), supp.end(), t)) continue;
        std::vector<int> e(I.ambient(), 0);
        e[t - 1] = 1;
        Monomial xt(e);
        if (!J.contains(xt)) continue;
        MonomialIdeal extended =
            add(I, MonomialIdeal::from_generators(I.ambient(), {xt}));
        if (reg_takayama(extended, opts).reg_quotient != r) return false;
    }
    return true;
}

}  // namespace symreg
