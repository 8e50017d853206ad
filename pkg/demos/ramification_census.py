"""A tour of the closed-form numerology.

Walks the small-parameter landscape of pencils with prescribed ramification:
which profiles can dominate the moduli of curves, how the expected codimension
grows, and where the nodal-curve count thresholds sit.

Run:  python3 demos/ramification_census.py
"""

from pencillab import (
    RamificationProfile,
    RiemannHurwitzViolation,
    delta_zero,
    expected_codimension,
    hurwitz_to_moduli_verdict,
    profile_report,
)


def verdict_table():
    print("Verdicts for two marked points with equal ramification order e:")
    print(f"{'g':>3} {'k':>3} {'e':>3} {'rho~':>5} {'codim':>6}  verdict")
    for g in range(0, 5):
        for k in (2, 3, 4):
            for e in range(2, k + 1):
                try:
                    prof = RamificationProfile(g, k, (e, e))
                except RiemannHurwitzViolation:
                    continue
                v = hurwitz_to_moduli_verdict(prof)
                print(
                    f"{g:>3} {k:>3} {e:>3} {v.rho_tilde:>5} "
                    f"{expected_codimension(prof):>6}  {v.tag.value}"
                )
    print()


def full_report_sample():
    print("Full report for a generically finite profile (g=3, k=2, e=(2,2)):")
    for key, value in profile_report(RamificationProfile(3, 2, (2, 2))).items():
        print(f"  {key:>11}: {value}")
    print()


def node_thresholds():
    print("Least node count delta_0(p, k) that makes the nodal family nonempty:")
    header = "p\\k " + " ".join(f"{k:>3}" for k in range(2, 7))
    print(header)
    for p in range(3, 13):
        row = [f"{delta_zero(p, k):>3}" for k in range(2, 7)]
        print(f"{p:>3} " + " ".join(row))
    print()
    print("The delta=0 column of the same question: a primitive family with no")
    print("nodes exists exactly when p <= 2k-2, visible as the 0 entries above.")


if __name__ == "__main__":
    verdict_table()
    full_report_sample()
    node_thresholds()
