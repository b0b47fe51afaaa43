"""Exact A_n character tables, including the irrational split values.

The split constituents take values (eps +- sqrt(eps * h_1 ... h_m))/2 on
the two classes whose cycle type equals their diagonal hooks; everything
else in the table is rational. The A_5 table below shows the golden
ratio pair on the 5-cycle classes, and A_7 a complex pair with
radicand -7.
"""

from ancover import an_character_table

for n in (5, 7):
    table = an_character_table(n)
    cells_text = [str(v) for row in table.values for v in row]
    width = max(
        max(len(c.text()) for c in table.classes),
        max(len(s) for s in cells_text),
    ) + 2
    print(f"\nA_{n} character table ({len(table.classes)} classes)")
    header = " " * 12 + "".join(c.text().rjust(width) for c in table.classes)
    print(header)
    for chi, row in zip(table.irreducibles, table.values):
        cells = "".join(str(v).rjust(width) for v in row)
        print(chi.text().ljust(12) + cells)

table = an_character_table(13)
table.verify_orthogonality()
print("\nA_13: orthogonality verified exactly over", len(table.classes), "classes")
