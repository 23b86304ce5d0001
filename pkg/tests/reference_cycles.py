"""Reference base-cycle listings used as exact fixtures."""

from equicycle.core import INF, Blown, Cycle, Rot


def rot(text: str) -> Cycle:
    """``"inf,2_0,1_0"`` -> a cycle on rotational vertices."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "inf":
            out.append(INF)
        else:
            a, i = tok.split("_")
            out.append(Rot(int(a), int(i)))
    return Cycle(out)


def blown(pairs) -> Cycle:
    return Cycle(Blown(g, h) for g, h in pairs)


K19 = {
    "C_inf": rot("inf,2_0,1_0,3_0,0_0,1_1,2_1,0_1,3_1"),
    "C": rot("0_1,7_0,1_1,6_0,2_1,5_0,3_1,4_0,4_1"),
    "C_4": rot("0_0,4_0,8_0,3_0,7_0,2_0,6_0,1_0,5_0"),
}

K69 = {
    "C_p": rot("0_0,1_0,17_0,2_0,8_0,3_0,7_0,4_0,4_1,7_1,3_1,8_1,2_1,10_1,0_1,1_1,17_1"),
    "C_0": rot("6_0,9_1,4_0,11_1,2_0,13_1,0_0,6_1,9_0,4_1,11_0,2_1,13_0,0_1,16_0,23_0,22_1"),
    "C_1": rot("6_1,8_0,4_1,12_0,2_1,14_0,0_1,6_0,8_1,4_0,12_1,2_0,14_1,0_0,15_1,22_1,21_0"),
    "C_inf^0": rot("inf,0_0,14_0,1_0,13_0,2_0,12_0,3_0,11_0,28_0,20_0,29_0,19_0,30_0,18_0,31_0,17_0"),
    "C_inf^1": rot("inf,0_1,15_1,1_1,14_1,2_1,13_1,4_1,6_1,23_1,21_1,30_1,19_1,31_1,18_1,32_1,17_1"),
    "C_2^0": rot(",".join(f"{2 * j}_0" for j in range(17))),
}

# (C_0, C_1) pairs for l = 3, 5, 7 (mod 8) and the l = 1 (mod 8) case at 17
C01 = {
    15: (
        rot("6_1,9_0,4_1,11_0,2_1,13_0,0_1,6_0,9_1,4_0,11_1,2_0,13_1,0_0,7_0"),
        rot("6_0,8_1,4_0,12_1,2_0,14_1,0_0,6_1,8_0,4_1,12_0,2_1,14_0,0_1,7_1"),
    ),
    21: (
        rot("8_0,9_1,6_0,11_1,4_0,13_1,2_0,15_1,0_0,8_1,9_0,6_1,11_0,4_1,13_0,2_1,15_0,0_1,19_0,29_0,27_1"),
        rot("8_1,12_0,6_1,16_0,4_1,18_0,2_1,20_0,0_1,8_0,12_1,6_0,16_1,4_0,18_1,2_0,20_1,0_0,17_1,27_1,25_0"),
    ),
    19: (
        rot("6_0,8_1,4_0,11_1,3_0,12_1,2_0,18_1,0_0,6_1,8_0,4_1,11_0,3_1,12_0,2_1,18_0,0_1,37_0"),
        rot("6_1,9_0,4_1,15_0,3_1,16_0,2_1,17_0,0_1,6_0,9_1,4_0,15_1,3_0,16_1,2_0,17_1,0_0,37_1"),
    ),
    17: (K69["C_0"], K69["C_1"]),
}

# C_p by (l, m)
CP = {
    (7, 3): rot("0_0,1_0,5_0,5_1,0_1,1_1,7_1"),
    (13, 5): rot("0_0,1_0,13_0,2_0,6_0,3_0,3_1,6_1,2_1,8_1,0_1,1_1,13_1"),
    (11, 3): rot("0_0,1_0,11_0,2_0,6_0,6_1,2_1,7_1,0_1,1_1,11_1"),
    (19, 7): rot("0_0,1_0,19_0,2_0,10_0,4_0,9_0,5_0,8_0,8_1,5_1,9_1,4_1,10_1,2_1,11_1,0_1,1_1,19_1"),
}

# C_3[l] base cycles written out for l = 11
C3_11 = {
    "C_1": blown([(0, 0), (1, 10), (0, 9), (1, 8), (0, 7), (1, 6), (0, 5), (1, 4), (0, 3), (1, 2), (2, 2)]),
    "C_2": blown([(0, 1), (1, 0), (2, 0), (1, 9), (2, 9), (1, 7), (2, 7), (1, 5), (2, 5), (1, 3), (2, 3)]),
    "C_3": blown([(0, 2), (1, 1), (2, 1), (0, 10), (2, 10), (0, 8), (2, 8), (0, 6), (2, 6), (0, 4), (2, 4)]),
    "C_4": blown([(0, 0), (1, 1), (2, 2), (0, 3), (2, 4), (0, 5), (2, 6), (0, 7), (2, 8), (0, 9), (2, 10)]),
    "C_5": blown([(0, 0), (1, 2), (2, 4), (0, 6), (1, 8), (2, 10), (0, 1), (1, 3), (0, 5), (2, 7), (1, 9)]),
}

C3_7_C4 = blown([(0, 0), (1, 1), (2, 2), (0, 3), (2, 4), (0, 5), (2, 6)])

C5_7 = {
    "C_1": blown([(0, 1), (1, 2), (2, 2), (3, 3), (4, 0), (0, 0), (1, 1)]),
    "C_2": blown([(0, 3), (1, 2), (2, 5), (3, 2), (4, 6), (0, 6), (1, 3)]),
    "C_3": blown([(0, 5), (1, 6), (2, 0), (3, 3), (4, 4), (0, 4), (1, 5)]),
    "C_4": blown([(0, 1), (1, 0), (2, 4), (3, 3), (4, 6), (0, 5), (1, 4)]),
    "C_5": blown([(0, 4), (1, 0), (2, 6), (3, 2), (4, 1), (0, 5), (1, 1)]),
}
