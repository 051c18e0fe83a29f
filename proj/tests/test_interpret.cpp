#include <algorithm>

#include "doctest.h"
#include "nclogic/error.hpp"
#include "nclogic/interpret.hpp"

using namespace nclogic;

TEST_CASE("hereditarily finite store") {
    HfUniverse hf;
    CHECK(hf.empty() == 0);
    CHECK(hf.rank(0) == 0);
    HfId one = hf.intern({0});
    CHECK(hf.intern({0, 0}) == one);
    CHECK(hf.rank(one) == 1);
    CHECK(hf.mem(0, one));
    CHECK_FALSE(hf.mem(one, 0));
    CHECK_THROWS_AS(hf.intern({7}), ValidationError);

    CHECK(hf.level(0).empty());
    CHECK(hf.level(1).size() == 1);
    CHECK(hf.level(2).size() == 2);
    CHECK(hf.level(3).size() == 4);
    CHECK(hf.level(4).size() == 16);
    CHECK_THROWS_AS(hf.level(5), ValidationError);
    for (HfId x : hf.level(4)) CHECK(hf.rank(x) <= 3);

    CHECK(hf.literal(0) == "{}");
    CHECK(hf.literal(one) == "{{}}");
    HfId two = hf.intern({0, one});
    CHECK(hf.literal(two) == "{{},{{}}}");
    for (HfId x : hf.level(4)) CHECK(hf.parse_literal(hf.literal(x)) == x);
    CHECK(hf.parse_literal(" { { } , { { } } } ") == two);
    CHECK_THROWS_AS(hf.parse_literal("{"), ParseError);
    CHECK_THROWS_AS(hf.parse_literal("{}x"), ParseError);
    CHECK_THROWS_AS(hf.parse_literal("(])"), ParseError);
}

TEST_CASE("doubling embedding") {
    HfUniverse hf;
    Universe uni;
    CHECK(check_embed(hf, hf.empty(), uni) == uni.empty());
    HfId one = hf.intern({0});
    SetId img = check_embed(hf, one, uni);
    CHECK(img == uni.intern({uni.empty()}, {uni.empty()}));
    CHECK(uni.is_classical(img));

    BatteryReport r = verify_check_iso(hf, uni, 4);
    CHECK(r.ok());
    CHECK(r.cases == 16 + 256);
    CHECK_THROWS_AS(verify_check_iso(hf, uni, 5), ValidationError);
}

TEST_CASE("hereditary classicality filter") {
    Universe uni;
    uni.level(3);
    SetId e = uni.empty();
    SetId over = uni.intern({e}, {});
    SetId ce = uni.classical_enum_set({e});
    SetId holder = uni.classical_enum_set({over});  // classical shell, odd core

    IdSet core = hcl_filter(uni, uni.level(2));
    CHECK(core == IdSet{e, ce});
    CHECK(hcl_filter(uni, uni.level(3)).size() == 4);
    CHECK(hcl_filter(uni, {over}).empty());
    CHECK(hcl_filter(uni, uni.close_members({holder})) == IdSet{e});

    for (int n = 0; n <= 3; n++) {
        HfUniverse hf;
        BatteryReport r = verify_hclw_equals_vcheck(hf, uni, n);
        CHECK(r.ok());
    }
}

TEST_CASE("coded pairs") {
    Universe uni;
    SetId e = uni.empty();
    SetId ce = classical_singleton(uni, e);
    CHECK(ce == uni.intern({e}, {e}));
    CHECK(classical_pair(uni, e, e) == ce);
    CHECK(classical_pair(uni, e, ce) == uni.classical_enum_set({e, ce}));

    SetId k = kuratowski(uni, e, ce);
    auto [a, b] = kuratowski_decode(uni, k);
    CHECK(a == e);
    CHECK(b == ce);
    CHECK(kuratowski(uni, e, e) == classical_singleton(uni, ce));
    auto [c, d] = kuratowski_decode(uni, kuratowski(uni, e, e));
    CHECK(c == e);
    CHECK(d == e);
    // coordinates are ordered
    CHECK(kuratowski(uni, ce, e) != k);
    auto [p, q] = kuratowski_decode(uni, kuratowski(uni, ce, e));
    CHECK(p == ce);
    CHECK(q == e);

    SetId over = uni.intern({e}, {});
    CHECK_THROWS_WITH_AS(kuratowski(uni, over, e),
                         doctest::Contains("classical components"), ValidationError);
    CHECK_THROWS_WITH_AS(kuratowski_decode(uni, e), doctest::Contains("not a coded"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(kuratowski_decode(uni, uni.classical_enum_set({e, ce})),
                         doctest::Contains("not a coded"), ValidationError);
    SetId two_singletons =
        uni.classical_enum_set({classical_singleton(uni, e),
                                classical_singleton(uni, ce)});
    CHECK_THROWS_WITH_AS(kuratowski_decode(uni, two_singletons),
                         doctest::Contains("not a coded"), ValidationError);
}

TEST_CASE("pair coding embedding") {
    Universe uni;
    SetId e = uni.empty();
    CHECK(hat_embed(uni, e) == kuratowski(uni, e, e));

    SetId over = uni.intern({e}, {});
    SetId h0 = hat_embed(uni, e);
    SetId expect = kuratowski(uni, uni.classical_enum_set({h0}), e);
    CHECK(hat_embed(uni, over) == expect);

    // classical sets code with equal coordinates
    SetId ce = uni.classical_enum_set({e});
    auto [a, b] = kuratowski_decode(uni, hat_embed(uni, ce));
    CHECK(a == b);

    for (int n = 0; n <= 2; n++) {
        BatteryReport r = verify_hat_iso(uni, n);
        CHECK(r.ok());
    }
    BatteryReport big = verify_hat_iso(uni, 3);
    CHECK(big.ok());
    CHECK(big.cases == 256 + 65536);
}

TEST_CASE("coded levels match the pair images") {
    Universe uni;
    for (int n = 0; n <= 2; n++) {
        BatteryReport r = verify_w_relativized_to_hcl(uni, n);
        CHECK(r.ok());
    }
    CHECK_THROWS_AS(verify_w_relativized_to_hcl(uni, 3), ValidationError);
}
