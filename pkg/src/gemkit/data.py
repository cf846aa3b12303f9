"""Bundled reference data.

``TABLE1`` lists the 34 order-14 graphs whose manifolds are the orientable
prime 3-manifolds with toric boundary of graph complexity 14.  Row names
follow the convention ``14^k_j``: ``k`` boundary tori, ``j`` an archive
index.  Thirty rows are complements of links in the 3-sphere; nineteen of
those links are prime and carry their Thistlethwaite archive names, the
eleven others are non-prime (``link_name`` is None), and the remaining four
rows (``link_complement`` False) are not link complements at all.

``COVERING_BASE_CODES`` holds three order-12 graphs whose manifolds glue
ten regular ideal tetrahedra; their connected admissible Z_n covers realize
manifolds of graph complexity between 10n and 12n for every n >= 1.
"""

from __future__ import annotations

from typing import NamedTuple, Optional


class Table1Row(NamedTuple):
    name: str
    code: str
    boundary_count: int
    link_name: Optional[str]
    link_complement: bool


TABLE1: tuple[Table1Row, ...] = (
    Table1Row("14^2_1", "EABCDGFGDFEBCADGEFBAC", 2, "L6a3", True),
    Table1Row("14^2_2", "DABCGEFGFECDBABGDFACE", 2, None, True),
    Table1Row("14^2_3", "GABCDEFEDGFABCDEFAGCB", 2, "L11n204", True),
    Table1Row("14^3_1", "EABCDGFGEFCADBCEGAFBD", 3, "L12n1998", True),
    Table1Row("14^3_2", "DABCGEFGFBADCEFCEAGDB", 3, None, False),
    Table1Row("14^3_3", "DABCGEFFDBECGAEDGCFAB", 3, None, True),
    Table1Row("14^3_4", "EABCDGFGDFEBCABDGAFEC", 3, "L8n6", True),
    Table1Row("14^3_5", "DABCGEFGEFBDACFGEBACD", 3, None, True),
    Table1Row("14^3_6", "EABCDGFGFDABECCEFAGDB", 3, None, False),
    Table1Row("14^3_7", "EABCDGFGFDABECFDGBACE", 3, None, True),
    Table1Row("14^3_8", "DABCGEFGDFCABEBFDECGA", 3, "L13n9356", True),
    Table1Row("14^3_9", "DABCGEFGEFBDACFCGABDE", 3, "L8n5", True),
    Table1Row("14^3_10", "DABCGEFGDFBACECFAEDGB", 3, "L6a4", True),
    Table1Row("14^4_1", "EABCDGFGFBACEDBCFDGAE", 4, None, True),
    Table1Row("14^4_2", "EABCDGFGBEDFACEFAGCDB", 4, None, False),
    Table1Row("14^4_3", "DABCGEFGCFADBEEGABCFD", 4, None, True),
    Table1Row("14^4_4", "EABCDGFGEFCADBBFDGEAC", 4, "L11n379", True),
    Table1Row("14^4_5", "EABCDGFGFECABDCGDAFEB", 4, None, True),
    Table1Row("14^4_6", "EABCDGFGDFACEBBFEDGAC", 4, None, False),
    Table1Row("14^4_7", "EABCDGFGFDEBCAFDEGCAB", 4, "L14n63157", True),
    Table1Row("14^4_8", "EABCDGFGFEBCDACGFEBAD", 4, "L14n61549", True),
    Table1Row("14^4_9", "EABCDGFGDFEBCAFCGADEB", 4, "L14n62850", True),
    Table1Row("14^4_10", "EABCDGFGFBEACDDCGAFEB", 4, None, True),
    Table1Row("14^4_11", "DABCGEFGEFBDACFGCABDE", 4, "L14n62541", True),
    Table1Row("14^4_12", "EABCDGFGEFBDACCGAEFDB", 4, None, True),
    Table1Row("14^4_13", "EABCDGFGEFBDACBGCEFDA", 4, None, True),
    Table1Row("14^4_14", "EABCDGFGDFACEBFCEGBAD", 4, "L8a21", True),
    Table1Row("14^4_15", "EABCDGFGFDABECFDEGCAB", 4, "L14n60227", True),
    Table1Row("14^4_16", "EABCDGFGFEACBDCDFGAEB", 4, "L10n96", True),
    Table1Row("14^4_17", "DABCGEFGEFBDACCGAFBDE", 4, "L11n456", True),
    Table1Row("14^4_18", "DABCGEFGEFBDACFGEACDB", 4, "L14n63000", True),
    Table1Row("14^5_1", "EABCDFGGFEBADCCDEGFAB", 5, None, True),
    Table1Row("14^5_2", "DABCGEFGFBADCEECFGABD", 5, "L12n2249", True),
    Table1Row("14^5_3", "DABCGEFGCFADBECDEGAFB", 5, "L14n63769", True),
)

#: Order-12 bases whose manifolds decompose into ten regular ideal tetrahedra.
COVERING_BASE_CODES: tuple[str, str, str] = (
    "DABCFEFEABDCCDEFAB",
    "FABCDEDEFABCCDEFAB",
    "DABCFEFEDABCBCFEDA",
)

#: Ideal tetrahedra in a triangulation of each covering base's manifold.
COVERING_BASE_TETRAHEDRA = 10

#: Header line of the census file format.
CENSUS_FORMAT = "gemkit-census v1"
