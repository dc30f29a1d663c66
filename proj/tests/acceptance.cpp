// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "quartika/families.hpp"
#include "quartika/records.hpp"
#include "quartika/richmond.hpp"
#include "quartika/search.hpp"

using namespace quartika;

namespace {

int failures = 0;

void criterion(int index, const std::string& what, double budget,
               const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("threw: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += "over time budget";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " [" << index << "] " << what << " ("
              << std::fixed << std::setprecision(2) << secs << "s/" << std::setprecision(0)
              << budget << "s)";
    if (!ok && !note.empty()) std::cout << " -- " << note;
    std::cout << std::endl;
    if (!ok) ++failures;
}

Quadruple quad(const Integer& n, const char* x, const char* y, const char* z, const char* w) {
    return Quadruple{n, Integer(x), Integer(y), Integer(z), Integer(w)};
}

struct FamilyRow {
    int m, n;
    const char* N;
    const char *x, *y, *z, *w;
};

const FamilyRow kFamilyRows[] = {
    {3, 1, "41", "29", "11", "63", "61"},
    {4, 2, "136", "31", "1", "76", "98"},
    {5, 1, "313", "181", "131", "785", "469"},
    {5, 3, "353", "361", "89", "1085", "1467"},
    {6, 4, "776", "209", "79", "774", "1036"},
    {7, 1, "1201", "649", "551", "4207", "1801"},
    {7, 3, "1241", "1021", "139", "4627", "5463"},
    {7, 5, "1513", "1669", "781", "7483", "9785"},
    {8, 2, "2056", "319", "191", "2072", "1538"},
    {8, 6, "2696", "751", "401", "3992", "5094"},
    {9, 1, "3281", "1721", "1559", "14769", "4921"},
    {9, 5, "3593", "3509", "541", "18981", "25385"},
    {9, 7, "4481", "5009", "2929", "30969", "38647"},
};

struct PipeRow {
    const char *x, *y, *z, *w;
};

const PipeRow kRows41[] = {
    {"29", "11", "63", "61"},
    {"17909", "5149", "37623", "38699"},
    {"229422601", "214213319", "663306603", "282177719"},
    {"81840455152441", "86237007592439", "252933880274523", "61172008172039"},
};

const PipeRow kRows17[] = {
    {"3120", "1921", "2242", "6529"},
    {"18418554", "88538885", "176117272", "95896333"},
    {"87733253643360", "108376421998081", "198203611434238", "206237591201281"},
    {"12509563104278834954874", "6446124521923428875525", "3117838409641509334568",
     "25836199364300466735373"},
};

struct TableRow {
    int n;
    const char *x, *y, *z, *w;
};

const TableRow kSmallest[] = {
    {2, "7", "20", "21", "19"},       {8, "19", "21", "40", "14"},
    {17, "5", "6", "13", "8"},        {41, "1", "1", "3", "1"},
    {82, "219", "320", "1011", "247"}, {97, "10", "37", "112", "71"},
    {113, "1", "2", "6", "5"},        {136, "1", "1", "4", "2"},
    {137, "29", "5", "99", "31"},     {146, "1", "2", "7", "3"},
    {178, "1", "2", "7", "5"},        {193, "18", "43", "159", "80"},
};

// Plain quadratic-time reference used to cross-check the indexed search.
std::optional<SearchHit> naive_smallest(const Integer& n, int bound) {
    std::optional<SearchHit> best;
    for (int z = 1; z <= bound; ++z)
        for (int w = z; w <= bound; ++w) {
            Integer s = pow4(Integer(z)) + pow4(Integer(w));
            if (s % n != 0) continue;
            Integer target = s / n;
            for (int x = 1; x <= bound; ++x)
                for (int y = x; y <= bound; ++y) {
                    if (pow4(Integer(x)) + pow4(Integer(y)) != target) continue;
                    Quadruple q{n, Integer(x), Integer(y), Integer(z), Integer(w)};
                    bool better =
                        !best || s < best->s ||
                        (s == best->s &&
                         (q.x < best->quad.x ||
                          (q.x == best->quad.x && q.z < best->quad.z)));
                    if (better) best = SearchHit{q, s};
                }
        }
    return best;
}

Integer max_coordinate(const Quadruple& q) {
    Integer m = q.x;
    if (q.y > m) m = q.y;
    if (q.z > m) m = q.z;
    if (q.w > m) m = q.w;
    return m;
}

} // namespace

int main() {
    criterion(1, "closed-form family reproduces all thirteen small-parameter rows", 1.0,
              [](std::string& note) {
                  for (const FamilyRow& row : kFamilyRows) {
                      Quadruple got =
                          family1_closed_form(Integer(row.m), Integer(row.n), Family1Form::TwoQ);
                      Quadruple want = quad(Integer(row.N), row.x, row.y, row.z, row.w);
                      if (got.n != want.n || !same_solution(got, want)) {
                          note = "mismatch at parameters (" + std::to_string(row.m) + "," +
                                 std::to_string(row.n) + ")";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "multiplier-41 pipeline matches its four published multiples", 5.0,
              [](std::string& note) {
                  for (int j = 2; j <= 5; ++j) {
                      const PipeRow& row = kRows41[j - 2];
                      Quadruple got = pipeline_instance41(Integer(j)).quad;
                      if (!same_solution(got, quad(Integer(41), row.x, row.y, row.z, row.w))) {
                          note = "mismatch at multiple " + std::to_string(j);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "multiplier-17 pipeline matches its four published multiples", 5.0,
              [](std::string& note) {
                  for (int j = 2; j <= 5; ++j) {
                      const PipeRow& row = kRows17[j - 2];
                      Quadruple got = pipeline_instance17(Integer(j)).quad;
                      if (!same_solution(got, quad(Integer(17), row.x, row.y, row.z, row.w))) {
                          note = "mismatch at multiple " + std::to_string(j);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "tangent-line step on the multiplier-97 seed", 1.0, [](std::string& note) {
        RichmondSeed seed{Integer(97), Integer(112), Integer(71), Integer(10), Integer(37)};
        std::mt19937 rng(4481);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        for (int round = 0; round < 10; ++round) {
            Rational p = make_rational(num(rng), den(rng));
            Rational q = make_rational(num(rng), den(rng));
            Rational r = make_rational(num(rng), den(rng));
            auto c = expand_coefficients(seed, p, q, r);
            if (c[2] != 448 * p * p * p + 284 * q * q * q - 3880 * r * r * r - 14356 ||
                c[1] != 75264 * p * p + 30246 * q * q - 58200 * r * r - 796758) {
                note = "coefficient expansion deviates from its closed form";
                return false;
            }
        }
        RichmondDirection dir = solve_direction(seed, Rational(1));
        if (dir.p != 1 || dir.q != make_rational(355949, 42103) ||
            dir.r != make_rational(-2950, 593)) {
            note = "direction differs from the published one";
            return false;
        }
        Quadruple step = descend(Integer(97),
                                 Quadruple{Integer(97), Integer(10), Integer(37), Integer(112),
                                           Integer(71)},
                                 Rational(1));
        Quadruple want = quad(Integer(97), "68026751110", "68835707869", "174887242544",
                              "240033770927");
        if (!same_solution(step, want) || !verify(step)) {
            note = "descent step differs from the published solution";
            return false;
        }
        return true;
    });

    criterion(5, "bounded sweep reproduces the full published smallest-solution table", 300.0,
              [](std::string& note) {
                  SearchConfig config;
                  config.n_min = 2;
                  config.n_max = 200;
                  config.bound = 1100;
                  unsigned hw = std::thread::hardware_concurrency();
                  config.threads = hw ? hw : 1;
                  std::vector<SearchOutcome> out = sweep(config);

                  std::size_t hits = 0;
                  for (const SearchOutcome& o : out)
                      if (o.hit) ++hits;
                  if (hits != 12) {
                      note = "expected 12 solvable multipliers, found " + std::to_string(hits);
                      return false;
                  }
                  for (const TableRow& row : kSmallest) {
                      const SearchOutcome* found = nullptr;
                      for (const SearchOutcome& o : out)
                          if (o.n == row.n) found = &o;
                      if (!found || !found->hit) {
                          note = "no solution found for " + std::to_string(row.n);
                          return false;
                      }
                      if (!same_solution(found->hit->quad,
                                         quad(Integer(row.n), row.x, row.y, row.z, row.w))) {
                          note = "wrong smallest solution for " + std::to_string(row.n);
                          return false;
                      }
                  }
                  for (int n : {2, 8, 17, 41}) {
                      auto reference = naive_smallest(Integer(n), 25);
                      SearchOutcome indexed = smallest_for_n(Integer(n), Integer(25));
                      if (reference.has_value() != indexed.hit.has_value()) {
                          note = "reference scan disagrees for " + std::to_string(n);
                          return false;
                      }
                      if (reference &&
                          (reference->s != indexed.hit->s ||
                           reference->quad != indexed.hit->quad)) {
                          note = "reference minimum differs for " + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "group law holds across one hundred random cases per curve", 30.0,
              [](std::string& note) {
                  std::vector<std::pair<WeierstrassCurve, ECPoint>> setups;
                  BirationalLink l41 = instance41_link();
                  BirationalLink l17 = instance17_link();
                  BirationalLink t31 = theorem1_link(Integer(3), Integer(1));
                  BirationalLink t53 = theorem1_link(Integer(5), Integer(3));
                  setups.push_back({l41.curve, l41.base});
                  setups.push_back({l17.curve, l17.base});
                  setups.push_back({t31.curve, t31.base});
                  setups.push_back({t53.curve, t53.base});

                  std::mt19937 rng(313);
                  std::uniform_int_distribution<int> small(1, 10);
                  std::uniform_int_distribution<int> wide(-20, 20);
                  for (int round = 0; round < 400; ++round) {
                      const auto& [c, g] = setups[round % setups.size()];
                      ECValue a = mul(c, Integer(small(rng)), ECValue{g});
                      ECValue b = mul(c, Integer(small(rng)), ECValue{g});
                      ECValue d = mul(c, Integer(small(rng)), ECValue{g});
                      ECValue ab = add(c, a, b);
                      if (!c.contains(ab)) {
                          note = "sum left the curve";
                          return false;
                      }
                      if (ab != add(c, b, a)) {
                          note = "addition is not commutative";
                          return false;
                      }
                      if (add(c, ab, d) != add(c, a, add(c, b, d))) {
                          note = "addition is not associative";
                          return false;
                      }
                      int j = wide(rng), k = wide(rng);
                      if (mul(c, Integer(j + k), ECValue{g}) !=
                          add(c, mul(c, Integer(j), ECValue{g}),
                              mul(c, Integer(k), ECValue{g}))) {
                          note = "multiplication is not additive";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "birational maps round-trip fifty multiples on every link", 240.0,
              [](std::string& note) {
                  std::vector<BirationalLink> links;
                  links.push_back(theorem1_link(Integer(3), Integer(1)));
                  links.push_back(theorem1_link(Integer(5), Integer(3)));
                  links.push_back(instance41_link());
                  links.push_back(instance17_link());
                  for (std::size_t li = 0; li < links.size(); ++li) {
                      const BirationalLink& link = links[li];
                      ECValue acc = link.base;
                      int checked = 0;
                      for (int j = 1; j <= 50; ++j) {
                          if (!acc) {
                              note = "a multiple vanished unexpectedly";
                              return false;
                          }
                          auto q = link.forward(*acc);
                          if (q) {
                              if (!link.quartic.contains(*q)) {
                                  note = "forward image left the quartic on link " +
                                         std::to_string(li);
                                  return false;
                              }
                              auto back = link.backward(*q);
                              if (back) {
                                  if (!(*back == *acc)) {
                                      note = "roundtrip failed at multiple " +
                                             std::to_string(j);
                                      return false;
                                  }
                                  ++checked;
                              }
                          }
                          acc = add(link.curve, acc, ECValue{link.base});
                      }
                      if (checked < 45) {
                          note = "too many multiples skipped on link " + std::to_string(li);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "every distinguished base point has infinite order", 10.0,
              [](std::string& note) {
                  for (const FamilyRow& row : kFamilyRows) {
                      BirationalLink link = theorem1_link(Integer(row.m), Integer(row.n));
                      if (!is_nontorsion(link.curve, link.base)) {
                          note = "torsion base point at (" + std::to_string(row.m) + "," +
                                 std::to_string(row.n) + ")";
                          return false;
                      }
                  }
                  if (!is_nontorsion(instance41_link().curve, instance41_link().base) ||
                      !is_nontorsion(instance17_link().curve, instance17_link().base)) {
                      note = "instance generator is torsion";
                      return false;
                  }
                  return true;
              });

    criterion(9, "both unbounded generators keep producing fresh solutions", 120.0,
              [](std::string& note) {
                  std::vector<Quadruple> quads;
                  for (int j = 2; j <= 8; ++j)
                      quads.push_back(pipeline_theorem1(Integer(3), Integer(1), Integer(j)).quad);
                  for (std::size_t i = 0; i < quads.size(); ++i)
                      for (std::size_t k = i + 1; k < quads.size(); ++k)
                          if (same_solution(quads[i], quads[k])) {
                              note = "repeated solution among the multiples";
                              return false;
                          }
                  for (std::size_t i = 1; i < quads.size(); ++i)
                      if (max_coordinate(quads[i]) <= max_coordinate(quads[i - 1])) {
                          note = "coordinate growth stalled";
                          return false;
                      }

                  Quadruple seed{Integer(97), Integer(10), Integer(37), Integer(112),
                                 Integer(71)};
                  ChainResult res = chain(Integer(97), seed, 3);
                  if (res.steps.size() != 3 || res.collapsed) {
                      note = "descent chain stopped early";
                      return false;
                  }
                  for (const Quadruple& q : res.steps)
                      if (!verify(q)) {
                          note = "descent chain emitted an invalid solution";
                          return false;
                      }
                  for (std::size_t i = 0; i < res.steps.size(); ++i)
                      for (std::size_t k = i + 1; k < res.steps.size(); ++k)
                          if (same_solution(res.steps[i], res.steps[k])) {
                              note = "descent chain repeated a solution";
                              return false;
                          }
                  if (!same_solution(res.steps[0], quad(Integer(97), "68026751110",
                                                        "68835707869", "174887242544",
                                                        "240033770927"))) {
                      note = "first descent step differs from the published solution";
                      return false;
                  }
                  return true;
              });

    criterion(10, "random parameters verify and the odd family matches its reduction", 60.0,
              [](std::string& note) {
                  std::mt19937 rng(1201);
                  std::uniform_int_distribution<int> draw(-99, 99);
                  int done = 0;
                  while (done < 50) {
                      int m = draw(rng), n = draw(rng);
                      if (m == 0 || n == 0) continue;
                      if (((m ^ n) & 1) != 0) continue; // need matching parity
                      Quadruple two =
                          family1_closed_form(Integer(m), Integer(n), Family1Form::TwoQ);
                      Quadruple three =
                          family1_closed_form(Integer(m), Integer(n), Family1Form::ThreeQ);
                      if (!verify(two) || !verify(three) ||
                          two.n != family1_multiplier(Integer(m), Integer(n))) {
                          note = "closed form failed at (" + std::to_string(m) + "," +
                                 std::to_string(n) + ")";
                          return false;
                      }
                      ++done;
                  }
                  for (int m = 3; m <= 99; m += 2) {
                      Quadruple first = family2_closed_form(Integer(m), Family2Form::First);
                      if (first.n * 2 != pow4(Integer(m)) + 1) {
                          note = "odd family has the wrong multiplier at " + std::to_string(m);
                          return false;
                      }
                      if (!same_solution(
                              first,
                              family1_closed_form(Integer(m), Integer(1), Family1Form::TwoQ)) ||
                          !same_solution(
                              family2_closed_form(Integer(m), Family2Form::Second),
                              family1_closed_form(Integer(m), Integer(1),
                                                  Family1Form::ThreeQ))) {
                          note = "odd family deviates at " + std::to_string(m);
                          return false;
                      }
                  }
                  return true;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: ")
              << (failures == 0 ? std::string() : std::to_string(failures)) << std::endl;
    return failures;
}
