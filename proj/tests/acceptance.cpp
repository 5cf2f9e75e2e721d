// Acceptance suite: one line per criterion, exact checks throughout.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/diamond.hpp"
#include "zigzag/harness.hpp"
#include "zigzag/homology.hpp"
#include "zigzag/io.hpp"
#include "zigzag/localize.hpp"
#include "zigzag/svg.hpp"

using namespace zigzag;
using namespace testutil;
namespace fs = std::filesystem;

#ifndef ZZ_FIXTURE_DIR
#define ZZ_FIXTURE_DIR "tests/fixtures"
#endif
#ifndef ZZ_CLI_PATH
#define ZZ_CLI_PATH ""
#endif

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

struct Check {
    Outcome* out;
    void operator()(bool cond, const std::string& what) const {
        if (!cond && out->pass) {
            out->pass = false;
            out->detail = what;
        }
    }
};

ZigzagModule projection_zigzag(FieldSpec f) {
    return ZigzagModule{f, ZigzagType::parse("gf"), {1, 2, 1},
                        {Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})}};
}

ZigzagModule projection_chain(int n, FieldSpec f) {
    std::string type;
    for (int i = 0; i < n; ++i) type += "gf";
    ZigzagModule m{f, ZigzagType::parse(type), {}, {}};
    for (int i = 0; i < 2 * n + 1; ++i) m.dims.push_back(i % 2 == 0 ? 1 : 2);
    for (int i = 0; i < 2 * n; ++i)
        m.maps.push_back(i % 2 == 0 ? Matrix::from_rows(f, {{1, 0}})
                                    : Matrix::from_rows(f, {{0, 1}}));
    return m;
}

// The shared seeded suite for criteria 2 and 3.
PlantedInstance suite_instance(std::uint64_t seed) {
    SplitMix64 rng(seed * 2654435761ull + 1);
    int length = 1 + int(rng.below(8));
    ZigzagType type = random_type(rng, length);
    FieldSpec field(seed % 2 == 0 ? 2u : 5u);
    return plant(rng.next(), type, 6, field);
}

void criterion_fixtures(const Check& check) {
    for (std::uint32_t p : {2u, 5u}) {
        Barcode bc = barcode_of(projection_zigzag(FieldSpec(p)));
        check(bc.total() == 2 && bc.multiplicity({1, 2}) == 1 && bc.multiplicity({2, 3}) == 1,
              "projection zigzag must decompose as {[1,2],[2,3]} over GF(" + std::to_string(p) +
                  ")");
    }
    for (int n : {2, 3}) {
        Barcode bc = barcode_of(projection_chain(n, FieldSpec(2)));
        Barcode expect;
        expect.grid = Barcode::integer_grid(2 * n + 1);
        expect.add({1, 2});
        for (int j = 1; j < n; ++j) expect.add({2 * j, 2 * j + 2});
        expect.add({2 * n, 2 * n + 1});
        check(bc.entries == expect.entries,
              "projection chain n=" + std::to_string(n) + " gave " + to_string(bc));
        check(bc.multiplicity({1, 2 * n + 1}) == 0,
              "projection chain n=" + std::to_string(n) + " must not contain the long interval");
    }
    check(birth_time_index(ZigzagType::parse("fgf")) == std::vector<int>{3, 1, 2, 4},
          "bt(fgf) != (3,1,2,4)");
    check(birth_time_index(ZigzagType::parse("ff")) == std::vector<int>{1, 2, 3}, "bt(ff)");
    check(birth_time_index(ZigzagType::parse("fg")) == std::vector<int>{3, 1, 2}, "bt(fg)");
    check(birth_time_index(ZigzagType::parse("gf")) == std::vector<int>{2, 1, 3}, "bt(gf)");
    check(birth_time_index(ZigzagType::parse("gg")) == std::vector<int>{3, 2, 1}, "bt(gg)");
    check(death_time_index(ZigzagType::parse("ffg"), 2) == std::vector<int>{2, 4, 3},
          "dt_2(ffg) != (2,4,3)");
}

void criterion_planted_recovery(const Check& check) {
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        PlantedInstance inst = suite_instance(seed);
        if (!(barcode_of(inst.module).entries == inst.truth.entries)) ++failures;
    }
    check(failures == 0, std::to_string(failures) + " of 1000 planted barcodes missed");
}

void criterion_oracles(const Check& check) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        PlantedInstance inst = suite_instance(seed);
        DecomposeResult res = decompose(inst.module);
        for (int k = 1; k <= inst.module.length(); ++k) {
            LocalizeResult loc = localize_at(inst.module, k);
            if (!(loc.intervals.entries == filter_through(res.barcode, k).entries)) {
                check(false, "localize mismatch at seed " + std::to_string(seed) + ", k=" +
                                 std::to_string(k));
                return;
            }
        }
        if (!(res.trace.c == intersection_formula_mults(inst.module))) {
            check(false, "multiplicity formulas disagree at seed " + std::to_string(seed));
            return;
        }
    }
}

void criterion_invariance(const Check& check) {
    SplitMix64 rng(0xACCE5);
    for (int trial = 0; trial < 200; ++trial) {
        FieldSpec f(trial % 2 == 0 ? 2u : 5u);
        ZigzagType t = random_type(rng, 1 + int(rng.below(7)));
        ZigzagModule m = random_module(rng, t, 4, f);
        Barcode bc = barcode_of(m);

        std::vector<Matrix> bases;
        for (int d : m.dims) bases.push_back(random_invertible(rng, d, f));
        if (!(barcode_of(change_basis(m, bases)).entries == bc.entries)) {
            check(false, "change_basis altered the barcode at trial " + std::to_string(trial));
            return;
        }

        if (trial < 100) {
            int n = m.length();
            for (int p = 1; p <= n; ++p)
                for (int q = p; q <= n; ++q) {
                    std::vector<int> K;
                    for (int i = p; i <= q; ++i) K.push_back(i);
                    if (!(barcode_of(restrict(m, p, q)).entries ==
                          barcode_restrict(bc, K).entries)) {
                        check(false, "restriction mismatch at trial " + std::to_string(trial));
                        return;
                    }
                }
        }

        if (!(barcode_of(reverse(m)).entries ==
              reflect_barcode(bc, m.length()).entries)) {
            check(false, "reversal duality failed at trial " + std::to_string(trial));
            return;
        }
    }
}

void criterion_diamond(const Check& check) {
    SplitMix64 rng(0xD1A);
    for (int trial = 0; trial < 200; ++trial) {
        FieldSpec f(trial % 2 == 0 ? 2u : 5u);
        int n = 3 + int(rng.below(5));
        int k = 2 + int(rng.below(n - 2));
        DiamondInstance d = random_exact_diamond(rng.next(), n, k, 6, f);
        if (!check_exact(d)) {
            check(false, "pushout diamond not exact at trial " + std::to_string(trial));
            return;
        }
        DiamondReport rep = verify_diamond_matching(d);
        if (!rep.ok) {
            check(false, "trial " + std::to_string(trial) + ": " + rep.detail);
            return;
        }
        const Barcode& up = rep.pers_plus;
        const Barcode& dn = rep.pers_minus;
        for (int b = 1; b <= k - 1; ++b)
            if (up.multiplicity({b, k}) != dn.multiplicity({b, k - 1})) {
                check(false, "death-shift rule failed at trial " + std::to_string(trial));
                return;
            }
        for (int dd = k + 1; dd <= n; ++dd)
            if (up.multiplicity({k, dd}) != dn.multiplicity({k + 1, dd})) {
                check(false, "birth-shift rule failed at trial " + std::to_string(trial));
                return;
            }
        for (int b = 1; b <= n; ++b)
            for (int dd = b; dd <= n; ++dd)
                if (b != k && b != k + 1 && dd != k && dd != k - 1 &&
                    up.multiplicity({b, dd}) != dn.multiplicity({b, dd})) {
                    check(false, "fixed-interval rule failed at trial " + std::to_string(trial));
                    return;
                }
        std::vector<int> K;
        for (int i = 1; i <= n; ++i)
            if (i != k) K.push_back(i);
        if (!(barcode_restrict(up, K).entries == barcode_restrict(dn, K).entries)) {
            check(false, "restricted equality failed at trial " + std::to_string(trial));
            return;
        }
    }
}

SimplicialComplex random_complex(SplitMix64& rng, int vertices) {
    std::vector<Simplex> simps;
    int n_simps = int(rng.below(7));
    for (int t = 0; t < n_simps; ++t) {
        Simplex s;
        int card = 1 + int(rng.below(3));
        for (int i = 0; i < card; ++i) s.push_back(int(rng.below(vertices)));
        simps.push_back(s);
    }
    return SimplicialComplex::build(vertices, simps);
}

void criterion_homology(const Check& check) {
    SplitMix64 rng(0x40E);
    for (int trial = 0; trial < 200; ++trial) {
        FieldSpec f(trial % 2 == 0 ? 2u : 5u);
        SimplicialComplex a = random_complex(rng, 6);
        SimplicialComplex b = random_complex(rng, 6);
        for (int ell = 0; ell <= 2; ++ell) {
            if (!mat_mul(boundary_matrix(a, ell + 1, f), boundary_matrix(a, ell + 2, f))
                     .is_zero()) {
                check(false, "boundary-of-boundary nonzero at trial " + std::to_string(trial));
                return;
            }
            if (!mv_check(a, b, ell, f)) {
                check(false, "Mayer-Vietoris failed at trial " + std::to_string(trial) +
                                 ", ell=" + std::to_string(ell));
                return;
            }
        }
    }

    SimplicialComplex arc_top = SimplicialComplex::build(4, {{0, 1}, {1, 2}});
    SimplicialComplex arc_bottom = SimplicialComplex::build(4, {{2, 3}, {0, 3}});
    StrongDiamondReport arcs = verify_strong_diamond({arc_top, arc_bottom}, 2, FieldSpec(2));
    check(arcs.ok, "two-arc circle fixture: " + arcs.detail);

    for (int trial = 0; trial < 100; ++trial) {
        FieldSpec f(trial % 2 == 0 ? 2u : 5u);
        int n = 2 + int(rng.below(3));
        std::vector<SimplicialComplex> seq;
        for (int i = 0; i < n; ++i) seq.push_back(random_complex(rng, 6));
        StrongDiamondReport rep = verify_strong_diamond(seq, 2, f);
        if (!rep.ok) {
            check(false, "strong diamond trial " + std::to_string(trial) + ": " + rep.detail);
            return;
        }
    }
}

void criterion_persistence_sanity(const Check& check) {
    SplitMix64 rng(0x5A17);
    for (int n = 1; n <= 5; ++n) {
        ZigzagType t = ZigzagType::parse(std::string(n - 1, 'f'));
        std::vector<int> dims(n, 0);
        while (true) {
            for (int fill = 0; fill < 3; ++fill) {
                ZigzagModule m{FieldSpec(2), t, dims, {}};
                for (int i = 0; i < n - 1; ++i) {
                    auto [r, c] = arrow_shape(t, dims, i);
                    m.maps.push_back(random_matrix(rng, r, c, FieldSpec(2)));
                }
                Barcode bc = barcode_of(m);
                for (int p = 1; p <= n; ++p) {
                    Matrix comp = Matrix::identity(FieldSpec(2), dims[p - 1]);
                    for (int q = p; q <= n; ++q) {
                        if (q > p) comp = mat_mul(m.maps[q - 2], comp);
                        bool nonzero = !comp.is_zero();
                        bool covered = false;
                        for (const auto& e : bc.entries)
                            if (e.iv.b <= p && q <= e.iv.d) covered = true;
                        if (nonzero != covered) {
                            check(false, "composite-map criterion failed for n=" +
                                             std::to_string(n) + " window [" +
                                             std::to_string(p) + "," + std::to_string(q) + "]");
                            return;
                        }
                    }
                }
            }
            // next dims vector over {0..3}^n
            int i = 0;
            while (i < n && dims[i] == 3) dims[i++] = 0;
            if (i == n) break;
            ++dims[i];
        }
    }
}

void criterion_cli(const Check& check) {
    std::string cli = ZZ_CLI_PATH;
    if (cli.empty()) {
        check(false, "CLI binary path not configured");
        return;
    }
    fs::path dir = fs::temp_directory_path() / "zz_acceptance";
    fs::create_directories(dir);

    // figure fixture: exactly five bar elements
    fs::path svg = dir / "sample.svg";
    std::string plot_cmd = cli + " plot " + std::string(ZZ_FIXTURE_DIR) +
                           "/sample_barcode.json -o " + svg.string() + " 2>/dev/null";
    if (std::system(plot_cmd.c_str()) != 0) {
        check(false, "plot subcommand failed");
        return;
    }
    std::string text = read_file(svg.string());
    long bars = 0;
    for (std::size_t pos = text.find("class=\"bar\""); pos != std::string::npos;
         pos = text.find("class=\"bar\"", pos + 1))
        ++bars;
    check(bars == 5, "expected 5 bar elements, found " + std::to_string(bars));

    // byte-identical round-trips on canonical forms, for all three formats
    SplitMix64 rng(0xC11);
    for (int trial = 0; trial < 25; ++trial) {
        PlantedInstance inst =
            plant(rng.next(), random_type(rng, 1 + int(rng.below(6))), 4, FieldSpec(5));
        std::string canon = module_to_json(inst.module);
        if (module_to_json(module_from_json(canon)) != canon) {
            check(false, "module file round-trip not byte-identical");
            return;
        }
        std::string bar = barcode_to_json(inst.truth);
        if (barcode_to_json(barcode_from_json(bar)) != bar) {
            check(false, "barcode file round-trip not byte-identical");
            return;
        }
    }
    ComplexSequenceFile f;
    f.field = FieldSpec(2);
    f.vertices = 4;
    f.mode = ZigzagMode::Union;
    f.ell_min = 0;
    f.ell_max = 1;
    f.complexes.push_back(SimplicialComplex::build(4, {{0, 1}, {1, 2}}));
    f.complexes.push_back(SimplicialComplex::build(4, {{2, 3}, {0, 3}}));
    std::string canon = complexes_to_json(f);
    check(complexes_to_json(complexes_from_json(canon)) == canon,
          "complex file round-trip not byte-identical");

    // and through the binary: decompose of a canonical module file is stable
    fs::path mod = dir / "mod.json";
    fs::path out1 = dir / "out1.json";
    fs::path out2 = dir / "out2.json";
    write_file(mod.string(), module_to_json(suite_instance(77).module));
    std::string c1 = cli + " decompose " + mod.string() + " -o " + out1.string() + " 2>/dev/null";
    std::string c2 = cli + " decompose " + mod.string() + " -o " + out2.string() + " 2>/dev/null";
    if (std::system(c1.c_str()) != 0 || std::system(c2.c_str()) != 0) {
        check(false, "decompose subcommand failed");
        return;
    }
    check(read_file(out1.string()) == read_file(out2.string()) &&
              !read_file(out1.string()).empty(),
          "CLI decompose output not stable");
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        std::function<void(const Check&)> fn;
        double budget_s;
    };
    std::vector<Row> rows = {
        {"1. worked fixtures (exact)", criterion_fixtures, 1.0},
        {"2. planted recovery, 1000 seeds", criterion_planted_recovery, 30.0},
        {"3. localization + multiplicity-formula oracles", criterion_oracles, 30.0},
        {"4. invariance under basis change, restriction, reversal", criterion_invariance, 60.0},
        {"5. diamond matching on 200 pushout diamonds", criterion_diamond, 60.0},
        {"6. homology: boundary^2, Mayer-Vietoris, strong diamond", criterion_homology, 60.0},
        {"7. composite-map feature criterion on forward towers", criterion_persistence_sanity,
         60.0},
        {"8. CLI figure elements and byte-identical round-trips", criterion_cli, 30.0},
    };

    bool all_pass = true;
    for (auto& row : rows) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            row.fn(Check{&out});
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (out.pass && out.seconds > row.budget_s) {
            out.pass = false;
            out.detail = "exceeded time budget of " + std::to_string(row.budget_s) + "s";
        }
        std::printf("[%s] %-55s (%6.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", row.name,
                    out.seconds, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
