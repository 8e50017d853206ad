"""Constructing branched covers of the line out of pure combinatorics.

A degree-k cover of P^1 with prescribed ramification exists exactly when a
tuple of cycles with matching lengths multiplies to the identity and generates
a transitive group.  This demo builds such tuples for a few profiles, checks
them, and compares against brute-force enumeration.

Run:  python3 demos/monodromy_walkthrough.py
"""

from pencillab import (
    construct_tuple,
    count_tuples,
    enumerate_tuples,
    pad_profile,
    verify_tuple,
)


def show(k, e):
    mt = construct_tuple(k, e)
    rep = verify_tuple(mt)
    cycles = " ".join("(" + " ".join(map(str, c)) + ")" for c in mt.to_json_dict()["cycles"])
    print(f"k={k}, e={e}")
    print(f"  built     : {cycles}")
    print(
        f"  verified  : identity={rep.product_is_identity}"
        f" transitive={rep.transitive} genus={rep.genus}"
    )
    total = count_tuples(k, e)
    print(f"  oracle    : {total} tuple(s) satisfy the same conditions")
    print()


def padding_example():
    print("Profiles short of the genus-0 budget are padded with simple points:")
    for k, e in [(3, (3,)), (4, (3, 2)), (5, (5, 5))]:
        print(f"  k={k}, e={e} -> {pad_profile(k, e)}")
    print()


def smallest_nontrivial_counts():
    print("Exhaustive counts for tiny profiles:")
    for k, e in [(2, (2, 2)), (3, (3, 3)), (3, (2, 2, 2, 2)), (4, (4, 4))]:
        found = enumerate_tuples(k, e)
        print(f"  k={k}, e={e}: {len(found)} tuple(s)")
    print()


if __name__ == "__main__":
    show(3, (2, 2, 2, 2))
    show(3, (3, 3))
    show(4, (2, 4, 2, 2))
    padding_example()
    smallest_nontrivial_counts()
