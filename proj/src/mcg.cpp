#include "bridge/mcg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bridge/errors.hpp"

namespace bridge {

SurfaceSpec SurfaceSpec::make(int n) {
    if (n < 2) throw ConfigError("bridge number n must be at least 2, got " + std::to_string(n));
    return SurfaceSpec{n};
}

McgWord::McgWord(SurfaceSpec spec, std::vector<McgGenerator> letters)
    : spec_(spec), letters_(std::move(letters)) {
    for (const auto& g : letters_) {
        if (g.index < 1 || g.index > spec_.max_generator() || (g.sign != 1 && g.sign != -1))
            throw ConfigError("generator out of range: " + std::to_string(g.sign * g.index) +
                              " for n=" + std::to_string(spec_.n));
    }
}

McgWord McgWord::parse(SurfaceSpec spec, const std::string& text) {
    std::istringstream in(text);
    std::vector<McgGenerator> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad word token '" + tok + "'");
        }
        if (used != tok.size() || v == 0) throw ConfigError("bad word token '" + tok + "'");
        out.push_back({std::abs(v), v > 0 ? 1 : -1});
    }
    return McgWord(spec, std::move(out));
}

std::vector<McgGenerator> McgWord::all_generators(SurfaceSpec spec) {
    std::vector<McgGenerator> out;
    for (int i = 1; i <= spec.max_generator(); ++i) {
        out.push_back({i, 1});
        out.push_back({i, -1});
    }
    return out;
}

McgWord McgWord::inverse() const {
    std::vector<McgGenerator> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return McgWord(spec_, std::move(out));
}

McgWord McgWord::operator*(const McgWord& rhs) const {
    if (!(spec_ == rhs.spec_)) throw std::invalid_argument("word composition across surfaces");
    std::vector<McgGenerator> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return McgWord(spec_, std::move(out));
}

McgWord McgWord::prepend(McgGenerator g) const {
    std::vector<McgGenerator> out;
    out.reserve(letters_.size() + 1);
    out.push_back(g);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return McgWord(spec_, std::move(out));
}

McgWord McgWord::prefix(std::size_t len) const {
    len = std::min(len, letters_.size());
    return McgWord(spec_, std::vector<McgGenerator>(letters_.begin(), letters_.begin() + len));
}

std::string McgWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(letters_[i].sign * letters_[i].index);
    }
    return s;
}

// ---- walk distribution ----------------------------------------------------

WalkDistribution::WalkDistribution(SurfaceSpec spec,
                                   std::vector<std::pair<McgGenerator, Rational>> support)
    : spec_(spec), support_(std::move(support)) {
    if (support_.empty()) throw ConfigError("walk distribution has empty support");
    std::int64_t lcm = 1;
    for (auto& [g, w] : support_) {
        McgWord check(spec_, {g});
        if (w.den < 0) {
            w.den = -w.den;
            w.num = -w.num;
        }
        if (w.num <= 0 || w.den == 0) throw ConfigError("walk weights must be positive");
        auto gg = std::gcd(w.num, w.den);
        w.num /= gg;
        w.den /= gg;
        lcm = std::lcm(lcm, w.den);
        if (lcm > (std::int64_t(1) << 40)) throw ConfigError("walk weight denominators too large");
    }
    for (const auto& [g, w] : support_) {
        unsigned __int128 v = static_cast<unsigned __int128>(w.num) * (lcm / w.den);
        total_ += static_cast<std::uint64_t>(v);
        if (v > (static_cast<unsigned __int128>(1) << 62) || total_ > (std::uint64_t(1) << 62))
            throw ConfigError("walk weights too large");
        int_weights_.push_back(static_cast<std::uint64_t>(v));
    }
}

WalkDistribution WalkDistribution::uniform(SurfaceSpec spec) {
    std::vector<std::pair<McgGenerator, Rational>> s;
    for (auto g : McgWord::all_generators(spec)) s.push_back({g, Rational{1, 1}});
    return WalkDistribution(spec, std::move(s));
}

WalkDistribution WalkDistribution::point_mass(SurfaceSpec spec, McgGenerator g) {
    return WalkDistribution(spec, {{g, Rational{1, 1}}});
}

namespace {

Rational parse_weight(const nlohmann::json& j) {
    if (j.is_number_integer()) return {j.get<std::int64_t>(), 1};
    std::string text;
    if (j.is_number_float()) {
        std::ostringstream os;
        os.precision(12);
        os << std::fixed << j.get<double>();
        text = os.str();
    } else if (j.is_string()) {
        text = j.get<std::string>();
    } else {
        throw ConfigError("walk weight must be a number or \"p/q\" string");
    }
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos)
            return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
        auto dot = text.find('.');
        if (dot == std::string::npos) return {std::stoll(text), 1};
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::int64_t den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return {std::stoll(digits), den};
    } catch (const std::exception&) {
        throw ConfigError("bad walk weight '" + text + "'");
    }
}

}  // namespace

WalkDistribution WalkDistribution::from_json_text(SurfaceSpec spec, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("support file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("support") || !j["support"].is_array())
        throw ConfigError("support file needs a \"support\" array");
    std::vector<std::pair<McgGenerator, Rational>> s;
    for (const auto& row : j["support"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
            !row[1].is_number_integer())
            throw ConfigError("support entries are [index, sign, weight]");
        s.push_back({McgGenerator{row[0].get<int>(), row[1].get<int>()}, parse_weight(row[2])});
    }
    return WalkDistribution(spec, std::move(s));
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t step,
                          std::uint64_t attempt) {
    std::uint64_t h = splitmix(seed);
    h = splitmix(h ^ (sample * 0xd1b54a32d192ed03ULL));
    h = splitmix(h ^ (step * 0xabc98388fb8fac03ULL));
    return splitmix(h ^ (attempt * 0x8cb92ba72f3d8dd7ULL));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t sample) {
    return stream_word(master, sample, ~std::uint64_t(0));
}

McgGenerator WalkDistribution::draw(std::uint64_t seed, std::uint64_t sample,
                                    std::uint64_t step) const {
    // Rejection keeps the draw exactly uniform on [0, total).
    const std::uint64_t threshold = (std::uint64_t(0) - total_) % total_;
    std::uint64_t r = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
        r = stream_word(seed, sample, step, attempt);
        if (r >= threshold) break;
    }
    r %= total_;
    for (std::size_t i = 0; i < int_weights_.size(); ++i) {
        if (r < int_weights_[i]) return support_[i].first;
        r -= int_weights_[i];
    }
    throw InvariantViolation("inverse CDF fell off the support");
}

McgWord sample_walk(const WalkDistribution& dist, std::size_t k, std::uint64_t seed) {
    std::vector<McgGenerator> out;
    out.reserve(k);
    for (std::size_t s = 0; s < k; ++s) out.push_back(dist.draw(seed, 0, s));
    return McgWord(dist.spec(), std::move(out));
}

// ---- permutations ----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int size) {
    std::vector<int> im(size);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int size, int a, int b) {
    auto p = identity(size);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::standard_pairing(int size) {
    std::vector<int> im(size);
    for (int i = 0; i < size; ++i) im[i] = (i % 2 == 0) ? i + 2 : i;
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& q) const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= size(); ++x) im[x - 1] = (*this)(q(x));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= size(); ++x) im[images_[x - 1] - 1] = x;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if (images_[x - 1] != x) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::string s;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x = 1; x <= size(); ++x) {
        if (seen[x] || images_[x - 1] == x) continue;
        s += '(';
        for (int y = x; !seen[y]; y = images_[y - 1]) {
            if (y != x) s += ' ';
            s += std::to_string(y);
            seen[y] = 1;
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation permutation_image(const McgWord& w) {
    const int size = w.spec().punctures();
    std::vector<int> im(size);
    std::iota(im.begin(), im.end(), 1);
    // p * t_i: precomposition swaps the images of i and i+1.
    for (const auto& g : w.letters()) std::swap(im[g.index - 1], im[g.index]);
    return Permutation(std::move(im));
}

int orbit_count(const std::vector<Permutation>& gens) {
    if (gens.empty()) return 0;
    const int size = gens.front().size();
    std::vector<int> parent(size + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int count = size;
    for (const auto& p : gens)
        for (int x = 1; x <= size; ++x) {
            int a = find(x), b = find(p(x));
            if (a != b) {
                parent[a] = b;
                --count;
            }
        }
    return count;
}

// ---- free group words -------------------------------------------------------

std::vector<int> free_reduce(const std::vector<int>& raw) {
    std::vector<int> out;
    out.reserve(raw.size());
    for (int x : raw) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::vector<int> cyclic_reduce(const std::vector<int>& raw) {
    std::vector<int> w = free_reduce(raw);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return std::vector<int>(w.begin() + lo, w.begin() + hi);
}

std::vector<int> least_rotation(const std::vector<int>& w) {
    const std::size_t n = w.size();
    if (n < 2) return w;
    auto key = [&](std::size_t i) {
        int x = w[i % n];
        return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0);
    };
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int a = key(i + k), b = key(j + k);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    std::size_t start = std::min(i, j);
    std::vector<int> out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = w[(start + t) % n];
    return out;
}

Pi1Word reduce(SurfaceSpec spec, std::vector<int> raw) {
    const int rank = spec.disk_punctures();
    std::vector<int> expanded;
    expanded.reserve(raw.size());
    for (int x : raw) {
        int a = std::abs(x);
        if (x == 0 || a > rank + 1) throw std::invalid_argument("letter out of range");
        if (a == rank + 1) {
            // x_{2n} = (x_1 ... x_{2n-1})^-1
            if (x > 0)
                for (int k = rank; k >= 1; --k) expanded.push_back(-k);
            else
                for (int k = 1; k <= rank; ++k) expanded.push_back(k);
        } else {
            expanded.push_back(x);
        }
    }
    Pi1Word out;
    out.rank_ = rank;
    out.letters_ = least_rotation(cyclic_reduce(expanded));
    return out;
}

std::string Pi1Word::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(letters_[i]);
    }
    return s;
}

Pi1Word Pi1Word::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& x : inv) x = -x;
    return reduce(SurfaceSpec{(rank_ + 1) / 2}, inv);
}

std::vector<int> act_generator_raw(McgGenerator g, const std::vector<int>& u) {
    const int i = g.index;
    std::vector<int> out;
    out.reserve(u.size() + 8);
    for (int x : u) {
        const int a = std::abs(x);
        int img[3];
        int len = 1;
        img[0] = a;
        if (g.sign > 0) {
            if (a == i) {
                img[0] = i;
                img[1] = i + 1;
                img[2] = -i;
                len = 3;
            } else if (a == i + 1) {
                img[0] = i;
            }
        } else {
            if (a == i) {
                img[0] = i + 1;
            } else if (a == i + 1) {
                img[0] = -(i + 1);
                img[1] = i;
                img[2] = i + 1;
                len = 3;
            }
        }
        if (x > 0) {
            for (int t = 0; t < len; ++t) {
                if (!out.empty() && out.back() == -img[t])
                    out.pop_back();
                else
                    out.push_back(img[t]);
            }
        } else {
            for (int t = len - 1; t >= 0; --t) {
                if (!out.empty() && out.back() == img[t])
                    out.pop_back();
                else
                    out.push_back(-img[t]);
            }
        }
    }
    return out;
}

Pi1Word act_pi1(const McgWord& w, const Pi1Word& u) {
    std::vector<int> cur = u.letters();
    const auto& L = w.letters();
    for (auto it = L.rbegin(); it != L.rend(); ++it) cur = cyclic_reduce(act_generator_raw(*it, cur));
    return reduce(w.spec(), std::move(cur));
}

}  // namespace bridge
