"""Static reference data: expected cohomology dimensions per divisor type,
automorphism-group labels with their dimensions, and Segre symbols.

The two cross-table identities encoded in ``verify_reference_tables``:
the plane h1 column equals the automorphism-group dimensions
(0,0,0,2,2,1,1,5,3) and the quadric h1 column equals (0,0,0,1,1,1,2,2,1,1,3,3,3);
each row also satisfies h2 - h1 = number of exceptional objects - 1.
"""

PLANE_HH = {
    "P1": (0, 2),
    "P2": (0, 2),
    "P3": (0, 2),
    "P4": (2, 4),
    "P5": (2, 4),
    "P6": (1, 3),
    "P7": (1, 3),
    "P8": (5, 7),
    "P9": (3, 5),
    "Linear": (8, 10),
}

QUADRIC_HH = {
    "Q1": (0, 3),
    "Q2": (0, 3),
    "Q3": (0, 3),
    "Q4": (1, 4),
    "Q5": (1, 4),
    "Q6": (1, 4),
    "Q7": (2, 5),
    "Q8": (2, 5),
    "Q9": (1, 4),
    "Q10": (1, 4),
    "Q11": (3, 6),
    "Q12": (3, 6),
    "Q13": (3, 6),
    "Linear": (6, 9),
}

#: automorphism groups fixing both line bundles (plane case): label, dimension
PLANE_AUT = {
    "P1": ("(Z/3)^2", 0),
    "P2": ("1", 0),
    "P3": ("Z/3", 0),
    "P4": ("Gm^2 x| C3", 2),
    "P5": ("Ga^2 x| S3", 2),
    "P6": ("Gm", 1),
    "P7": ("Ga", 1),
    "P8": ("Ga^2 x| SL2", 5),
    "P9": ("Ga x (Ga x| Gm)", 3),
}

#: automorphism groups fixing all three line bundles (quadric case)
QUADRIC_AUT = {
    "Q1": ("(Z/2)^2", 0),
    "Q2": ("1", 0),
    "Q3": ("Z/2", 0),
    "Q4": ("Gm x Z/2", 1),
    "Q5": ("Ga x S2", 1),
    "Q6": ("Gm", 1),
    "Q7": ("Ga^2", 2),
    "Q8": ("Gm^2 x| Z/2", 2),
    "Q9": ("Gm", 1),
    "Q10": ("Ga", 1),
    "Q11": ("PGL2", 3),
    "Q12": ("Ga^2 x| (Gm x S2)", 3),
    "Q13": ("Ga^2 x| Gm", 3),
}

SEGRE_SYMBOLS = {
    "Q1": "[1,1,1,1]",
    "Q2": "[3,1]",
    "Q3": "[2,1,1]",
    "Q4": "[(1,1),1,1]",
    "Q5": "[(2,1),1]",
    "Q6": "[2,(1,1)]",
    "Q7": "[(3,1)]",
    "Q8": "[(1,1),(1,1)]",
    "Q9": "[2,2]",
    "Q10": "[4]",
    "Q11": "[(1,1,1),1]",
    "Q12": "[(2,1,1)]",
    "Q13": "[(2,2)]",
}

PLANE_ORDER = [f"P{i}" for i in range(1, 10)]
QUADRIC_ORDER = [f"Q{i}" for i in range(1, 14)]


def expected_hh(family: str, verdict: str):
    table = PLANE_HH if family == "plane" else QUADRIC_HH
    return table[verdict]


def verify_reference_tables():
    """Internal and cross-table identities; returns a list of failures."""
    failures = []
    for label in PLANE_ORDER + ["Linear"]:
        h1, h2 = PLANE_HH[label]
        if h2 - h1 != 2:
            failures.append(f"plane row {label}: h2 - h1 = {h2 - h1} != 2")
    for label in QUADRIC_ORDER + ["Linear"]:
        h1, h2 = QUADRIC_HH[label]
        if h2 - h1 != 3:
            failures.append(f"quadric row {label}: h2 - h1 = {h2 - h1} != 3")
    for label in PLANE_ORDER:
        if PLANE_HH[label][0] != PLANE_AUT[label][1]:
            failures.append(
                f"plane row {label}: h1 {PLANE_HH[label][0]} != dim {PLANE_AUT[label]}"
            )
    for label in QUADRIC_ORDER:
        if QUADRIC_HH[label][0] != QUADRIC_AUT[label][1]:
            failures.append(
                f"quadric row {label}: h1 {QUADRIC_HH[label][0]} != dim {QUADRIC_AUT[label]}"
            )
    return failures
