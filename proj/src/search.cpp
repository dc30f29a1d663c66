#include "quartika/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace quartika {

bool admissible(const Integer& n, const SearchConfig& config) {
    if (n < 1) throw Error("BadArgument", "admissible needs n >= 1");
    if (!config.residue_filter.empty()) {
        int res = static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 16));
        if (!config.residue_filter.count(res)) return false;
    }
    if (config.fourth_power_free) {
        for (Integer k = 2; k * k * k * k <= n; ++k)
            if (n % (k * k * k * k) == 0) return false;
    }
    return true;
}

namespace {

using u128 = unsigned __int128;

// Sorted fourth-power-sum table v = x^4+y^4 (x <= y), minimal (x,y) per
// value; shared read-only across worker threads.
struct SumTable {
    std::vector<u128> value;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair;

    const std::pair<std::uint32_t, std::uint32_t>* find(u128 v) const {
        auto it = std::lower_bound(value.begin(), value.end(), v);
        if (it == value.end() || *it != v) return nullptr;
        return &pair[static_cast<std::size_t>(it - value.begin())];
    }
};

SumTable build_table(std::uint64_t bound, bool allow_zero) {
    std::uint64_t lo = allow_zero ? 0 : 1;
    std::vector<u128> fourth(bound + 1);
    for (std::uint64_t i = 0; i <= bound; ++i) {
        u128 sq = static_cast<u128>(i) * i;
        fourth[i] = sq * sq;
    }
    struct Row {
        u128 v;
        std::uint32_t x, y;
    };
    std::vector<Row> rows;
    rows.reserve(((bound + 1) * (bound + 2)) / 2);
    for (std::uint64_t x = lo; x <= bound; ++x)
        for (std::uint64_t y = x; y <= bound; ++y) {
            u128 v = fourth[x] + fourth[y];
            if (v == 0) continue;
            rows.push_back({v, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
        }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    SumTable table;
    table.value.reserve(rows.size());
    table.pair.reserve(rows.size());
    for (const Row& r : rows) {
        if (!table.value.empty() && table.value.back() == r.v) continue; // keep minimal (x,y)
        table.value.push_back(r.v);
        table.pair.push_back({r.x, r.y});
    }
    return table;
}

Integer to_integer(u128 v) {
    Integer high(static_cast<unsigned long>(v >> 64));
    Integer low(static_cast<unsigned long>(v));
    return (high << 64) | low;
}

SearchOutcome scan_one(const Integer& n, std::uint64_t bound, bool allow_zero,
                       const SumTable& table) {
    std::uint64_t lo = allow_zero ? 0 : 1;
    std::uint64_t nn = mpz_get_ui(n.get_mpz_t());
    std::optional<SearchHit> best;
    u128 best_s = 0;
    std::uint32_t best_x = 0, best_z = 0;
    for (std::uint64_t z = lo; z <= bound; ++z) {
        u128 z4 = static_cast<u128>(z) * z;
        z4 *= z4;
        if (best && 2 * z4 > best_s) break;
        for (std::uint64_t w = z; w <= bound; ++w) {
            u128 w4 = static_cast<u128>(w) * w;
            w4 *= w4;
            u128 s = z4 + w4;
            if (best && s > best_s) break; // s grows with w
            if (s == 0 || s % nn) continue;
            const auto* xy = table.find(s / nn);
            if (!xy) continue;
            if (best && s == best_s &&
                (xy->first > best_x || (xy->first == best_x && z >= best_z)))
                continue;
            best_s = s;
            best_x = xy->first;
            best_z = static_cast<std::uint32_t>(z);
            Quadruple q{n, Integer(static_cast<unsigned long>(xy->first)),
                        Integer(static_cast<unsigned long>(xy->second)),
                        Integer(static_cast<unsigned long>(z)),
                        Integer(static_cast<unsigned long>(w))};
            best = SearchHit{q, to_integer(s)};
        }
    }
    if (best && !verify(best->quad)) throw VerificationError("search hit fails verification");
    return SearchOutcome{n, best};
}

// Arbitrary-precision fallback for bounds past the 128-bit fast path.
SearchOutcome scan_one_big(const Integer& n, const Integer& bound, bool allow_zero) {
    Integer lo = allow_zero ? 0 : 1;
    std::vector<std::pair<Integer, std::pair<Integer, Integer>>> rows;
    for (Integer x = lo; x <= bound; ++x)
        for (Integer y = x; y <= bound; ++y) {
            Integer v = pow4(x) + pow4(y);
            if (v == 0) continue;
            rows.push_back({v, {x, y}});
        }
    std::sort(rows.begin(), rows.end());
    std::optional<SearchHit> best;
    for (Integer z = lo; z <= bound; ++z)
        for (Integer w = z; w <= bound; ++w) {
            Integer s = pow4(z) + pow4(w);
            if (s == 0 || s % n != 0) continue;
            Integer v = s / n;
            auto it = std::lower_bound(rows.begin(), rows.end(), v,
                                       [](const auto& row, const Integer& key) {
                                           return row.first < key;
                                       });
            if (it == rows.end() || it->first != v) continue;
            Quadruple q{n, it->second.first, it->second.second, z, w};
            if (!best || s < best->s ||
                (s == best->s && (q.x < best->quad.x ||
                                  (q.x == best->quad.x && q.z < best->quad.z))))
                best = SearchHit{q, s};
        }
    return SearchOutcome{n, best};
}

} // namespace

SearchOutcome smallest_for_n(const Integer& n, const Integer& bound, bool allow_zero) {
    if (n < 1 || bound < 1) throw Error("BadArgument", "need n >= 1 and bound >= 1");
    if (bound < 50000 && n < 1000000) {
        std::uint64_t b = mpz_get_ui(bound.get_mpz_t());
        SumTable table = build_table(b, allow_zero);
        return scan_one(n, b, allow_zero, table);
    }
    return scan_one_big(n, bound, allow_zero);
}

std::string checkpoint_line(const SearchOutcome& outcome) {
    std::ostringstream os;
    if (outcome.hit) {
        const Quadruple& q = outcome.hit->quad;
        os << outcome.n << ",hit," << q.x << ',' << q.y << ',' << q.z << ',' << q.w << ','
           << outcome.hit->s;
    } else {
        os << outcome.n << ",notfound,0,0,0,0,0";
    }
    return os.str();
}

std::optional<SearchOutcome> parse_checkpoint_line(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 7) return std::nullopt;
    auto n = parse_integer(parts[0]);
    if (!n || *n < 1) return std::nullopt;
    if (parts[1] == "notfound") return SearchOutcome{*n, std::nullopt};
    if (parts[1] != "hit") return std::nullopt;
    std::optional<Integer> vals[5];
    for (int i = 0; i < 5; ++i) {
        vals[i] = parse_integer(parts[2 + i]);
        if (!vals[i]) return std::nullopt;
    }
    Quadruple q{*n, *vals[0], *vals[1], *vals[2], *vals[3]};
    if (!verify(q)) return std::nullopt;
    if (*vals[4] != q.n * (pow4(q.x) + pow4(q.y))) return std::nullopt;
    return SearchOutcome{*n, SearchHit{q, *vals[4]}};
}

std::vector<SearchOutcome> sweep(const SearchConfig& config) {
    if (config.n_min < 1 || config.n_min > config.n_max || config.bound < 1)
        throw Error("BadArgument", "invalid search range");

    std::vector<Integer> targets;
    for (Integer n = config.n_min; n <= config.n_max; ++n)
        if (admissible(n, config)) targets.push_back(n);

    std::vector<SearchOutcome> done;
    if (!config.checkpoint.empty()) {
        std::ifstream in(config.checkpoint);
        if (in.good()) {
            std::string line;
            bool corrupt = false;
            std::vector<SearchOutcome> loaded;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto parsed = parse_checkpoint_line(line);
                if (!parsed) {
                    corrupt = true;
                    break;
                }
                loaded.push_back(std::move(*parsed));
            }
            if (corrupt) {
                std::cerr << "warning: checkpoint " << config.checkpoint
                          << " is corrupt; starting fresh\n";
            } else {
                for (SearchOutcome& o : loaded)
                    if (std::binary_search(targets.begin(), targets.end(), o.n))
                        done.push_back(std::move(o));
            }
        }
    }

    auto already = [&](const Integer& n) {
        return std::any_of(done.begin(), done.end(),
                           [&](const SearchOutcome& o) { return o.n == n; });
    };
    std::vector<Integer> pending;
    for (const Integer& n : targets)
        if (!already(n)) pending.push_back(n);

    std::vector<SearchOutcome> results = done;
    std::mutex sink;

    auto flush_checkpoint = [&]() {
        if (config.checkpoint.empty()) return;
        std::string tmp = config.checkpoint + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            std::vector<SearchOutcome> snapshot = results;
            std::sort(snapshot.begin(), snapshot.end(),
                      [](const SearchOutcome& a, const SearchOutcome& b) { return a.n < b.n; });
            for (const SearchOutcome& o : snapshot) out << checkpoint_line(o) << '\n';
        }
        std::rename(tmp.c_str(), config.checkpoint.c_str());
    };

    bool fast = config.bound < 50000 && config.n_max < 1000000;
    SumTable table;
    std::uint64_t b = 0;
    if (fast && !pending.empty()) {
        b = mpz_get_ui(Integer(config.bound).get_mpz_t());
        table = build_table(b, config.allow_zero);
    }

    std::atomic<std::size_t> cursor{0};
    unsigned nthreads = std::max(1u, config.threads);
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= pending.size()) return;
            SearchOutcome out = fast ? scan_one(pending[i], b, config.allow_zero, table)
                                     : scan_one_big(pending[i], config.bound, config.allow_zero);
            std::lock_guard<std::mutex> lock(sink);
            results.push_back(std::move(out));
            flush_checkpoint();
        }
    };
    if (nthreads == 1 || pending.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(results.begin(), results.end(),
              [](const SearchOutcome& a, const SearchOutcome& b) { return a.n < b.n; });
    return results;
}

} // namespace quartika
