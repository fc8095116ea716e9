"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the package's diagram-evaluation machinery: every
condition here is a direct nested-loop statement about a multiplication
table.  The main code path must agree with them, not the other way around.
"""

import itertools


def table_is_associative(table):
    n = len(table)
    return all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )


def designated_is_right_identity(table, d):
    return all(row[d] == i for i, row in enumerate(table))


def designated_is_left_identity(table, d):
    return all(table[d][j] == j for j in range(len(table)))


def reduced_signature(table, d):
    """(pentagon, left, mid, right, unitunit) via the direct table conditions.

    The left-unit and unit-unit axioms hold for every magma model; the other
    three reduce to associativity / right identity / left identity of the
    designated element.
    """
    return (
        table_is_associative(table),
        True,
        designated_is_right_identity(table, d),
        designated_is_left_identity(table, d),
        True,
    )


def all_tables(n):
    """Every n x n multiplication table, in lexicographic cell order."""
    for cells in itertools.product(range(n), repeat=n * n):
        yield [list(cells[i * n : (i + 1) * n]) for i in range(n)]


def census_by_oracle(max_size):
    """signature -> (count, first witness (size, table, designated)).

    Enumeration order: size ascending, table lexicographic, designated
    ascending.  Counts magmas of every size up to max_size inclusive.
    """
    out = {}
    for n in range(1, max_size + 1):
        for table in all_tables(n):
            for d in range(n):
                sig = reduced_signature(table, d)
                if sig in out:
                    count, witness = out[sig]
                    out[sig] = (count + 1, witness)
                else:
                    out[sig] = (1, (n, [row[:] for row in table], d))
    return out


if __name__ == "__main__":
    for bound in (1, 2, 3):
        result = census_by_oracle(bound)
        total = sum(c for c, _ in result.values())
        print(f"max_size={bound}  total={total}")
        for sig in sorted(result, reverse=True):
            count, (n, table, d) = result[sig]
            flags = "".join("T" if b else "F" for b in sig)
            print(f"  {flags}  count={count:6d}  witness size={n} d={d} table={table}")
