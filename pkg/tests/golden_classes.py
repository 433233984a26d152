"""Frozen reference isospectrality classes for the full catalog.

Only classes with more than one member are listed; every other group is a
singleton in the respective relation.
"""

P0_SETS = [
    {"3", "3''"}, {"3'", "3'''"}, {"6", "6'"}, {"47", "47'"},
    {"7'", "10"}, {"8", "9'"}, {"14", "14'"}, {"15", "15'"},
    {"18", "19"}, {"19'", "21"}, {"22", "22'"}, {"24", "26"},
    {"34", "38"}, {"35", "40"}, {"39", "41"}, {"57", "58"},
]

P1_SETS = [
    {"3", "3''"}, {"3'", "3'''"}, {"5", "5'", "6", "6'"}, {"47", "47'"},
    {"7", "9"}, {"7'", "8", "9'", "10"}, {"8'", "10'"}, {"10''", "11"},
    {"14", "14'"}, {"15", "15'"}, {"18", "19", "20"}, {"19'", "20'", "21"},
    {"22", "22'"}, {"23", "23'"},
    {"24", "25", "26", "27", "28", "29", "29'", "50", "51"},
    {"34", "36", "38"}, {"35", "40"}, {"39", "41"}, {"57", "58"},
    {"60", "61"},
]

P2_SETS = [
    {"2", "2'", "2''", "3", "3'", "3''", "3'''", "4"}, {"6", "6'"},
    {"47", "47'"},
    {"7", "8", "9'", "10'", "10''", "11'", "12'", "18", "19", "19'", "21",
     "21'", "23", "50"},
    {"7'", "8'", "9", "10", "11", "12", "20", "20'", "23'", "51"},
    {"13", "13'", "14", "14'", "15", "15'", "22", "22'"},
    {"24", "26"}, {"33", "37", "39", "41", "43"}, {"34", "38"},
    {"35", "36", "40", "42", "44"}, {"57", "58"},
]

L_SETS = [
    {"3", "3''"}, {"3'", "3'''"}, {"6", "6'"}, {"47", "47'"},
    {"7'", "10"}, {"8", "9'"}, {"14", "14'"}, {"15", "15'"},
    {"18", "19"}, {"19'", "21"}, {"22", "22'"}, {"24", "26"},
    {"34", "38", "39", "41"}, {"35", "40"}, {"57", "58"},
    {"25", "27"}, {"33", "43"}, {"42", "44"},
]

BRACKETL_PAIRS = [
    {"3", "3''"}, {"3'", "3'''"}, {"6", "6'"}, {"47", "47'"},
    {"7'", "10"}, {"14", "14'"}, {"15", "15'"}, {"18", "19"},
    {"19'", "21"}, {"22", "22'"}, {"24", "26"}, {"57", "58"},
]

# L-isospectral sets (or subsets) whose class-length multiplicities must
# disagree somewhere at squared length <= 3
BRACKETL_EXCLUDED = [
    {"8", "9'"}, {"25", "27"}, {"33", "43"}, {"35", "40"}, {"42", "44"},
    {"34", "38"}, {"34", "39"}, {"34", "41"}, {"38", "39"}, {"38", "41"},
    {"39", "41"},
]


def as_sorted_lists(sets):
    from flat4spec.classify import id_sort_key

    out = [sorted(s, key=id_sort_key) for s in sets]
    out.sort(key=lambda cls: id_sort_key(cls[0]))
    return out
