"""SDPA sparse-format (.dat-s) export for ConicPrograms.

The file encodes the program on the SDPA "Y" side: maximize tr(F0 Y)
subject to tr(F_k Y) = c_k and Y >= 0, where Y stacks one diagonal
block holding the plus/minus split of every free scalar, one diagonal
block of slacks for the '<=' rows, and one PSD block per declared
block.  Each program row becomes one constraint matrix F_k with its
right-hand side in the c vector.  Off-diagonal coefficients are halved
on write because tr(F Y) picks them up twice.

Output is deterministic: rows keep program order and the entries of
every matrix are sorted by (block, i, j).
"""

from __future__ import annotations

from .program import ConicProgram


def _fmt(v: float) -> str:
    return repr(float(v))


def export_sdpa(prog: ConicProgram) -> str:
    """Serialize a float-field ConicProgram to SDPA sparse format."""
    if prog.field != "float":
        raise ValueError("export_sdpa expects a float-field program")
    prog.validate()

    scalars = list(prog.scalars)
    block_names = list(prog.blocks)
    ineq_rows = [k for k, row in enumerate(prog.rows) if row.kind == "<="]

    # block table: 1-based SDPA block numbers
    blocks = []          # (size, diagonal?)
    scalar_block = None
    if scalars:
        scalar_block = len(blocks) + 1
        blocks.append((-2 * len(scalars), True))
    slack_block = None
    if ineq_rows:
        slack_block = len(blocks) + 1
        blocks.append((-len(ineq_rows), True))
    psd_block0 = len(blocks) + 1
    for name in block_names:
        blocks.append((prog.blocks[name], False))

    scalar_pos = {name: 2 * k + 1 for k, name in enumerate(scalars)}
    slack_pos = {row_idx: k + 1 for k, row_idx in enumerate(ineq_rows)}
    psd_no = {name: psd_block0 + k for k, name in enumerate(block_names)}

    def term_entries(terms):
        """Program terms -> [(blkno, i, j, value)] with 1-based indices."""
        out = []
        for key, cval in terms.items():
            v = float(cval)
            if key[0] == "s":
                p = scalar_pos[key[1]]
                out.append((scalar_block, p, p, v))
                out.append((scalar_block, p + 1, p + 1, -v))
            else:
                _, name, i, j = key
                w = v if i == j else v / 2.0
                out.append((psd_no[name], i + 1, j + 1, w))
        return out

    m = len(prog.rows)
    lines = [f'"{prog.meta.get("model", "conic program")} export"']
    lines.append(f"{m} = mDIM")
    lines.append(f"{len(blocks)} = nBLOCK")
    lines.append("{" + ", ".join(str(sz) for sz, _ in blocks) + "} = bLOCKsTRUCT")
    lines.append(" ".join(_fmt(row.rhs) for row in prog.rows))

    entries = []  # (matno, blkno, i, j, value)
    sign = 1.0 if prog.sense == "max" else -1.0
    for (blk, i, j, v) in term_entries(prog.objective):
        entries.append((0, blk, i, j, sign * v))
    for k, row in enumerate(prog.rows, start=1):
        for (blk, i, j, v) in term_entries(row.terms):
            entries.append((k, blk, i, j, v))
        if row.kind == "<=":
            p = slack_pos[k - 1]
            entries.append((k, slack_block, p, p, 1.0))

    entries.sort(key=lambda t: (t[0], t[1], t[2], t[3]))
    # merge duplicates (a row may touch the same entry twice)
    merged = []
    for ent in entries:
        if merged and merged[-1][:4] == ent[:4]:
            merged[-1] = ent[:4] + (merged[-1][4] + ent[4],)
        else:
            merged.append(ent)
    for (mat, blk, i, j, v) in merged:
        if v != 0.0:
            lines.append(f"{mat} {blk} {i} {j} {_fmt(v)}")
    return "\n".join(lines) + "\n"


def parse_sdpa(text: str):
    """Parse SDPA sparse format back into plain data.

    Returns dict with m, block_struct (list of signed sizes), c (list),
    and mats: {matno: {(blkno, i, j): value}}.  Accepts comment lines
    starting with " or * and commas/braces in the structure lines.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith('"') and not ln.startswith("*")]
    pos = 0

    def next_ints(expected=None):
        nonlocal pos
        toks = lines[pos].replace("=", " ").split()
        nums = []
        for t in toks:
            try:
                nums.append(int(t))
            except ValueError:
                break
        pos += 1
        return nums

    m = next_ints()[0]
    nblock = next_ints()[0]
    struct_line = lines[pos].split("=")[0]
    pos += 1
    for ch in "{}(),":
        struct_line = struct_line.replace(ch, " ")
    block_struct = [int(t) for t in struct_line.split()]
    if len(block_struct) != nblock:
        raise ValueError(f"block structure has {len(block_struct)} entries, expected {nblock}")
    c_line = lines[pos]
    pos += 1
    for ch in "{}(),":
        c_line = c_line.replace(ch, " ")
    c = [float(t) for t in c_line.split()]
    if len(c) != m:
        raise ValueError(f"c vector has {len(c)} entries, expected {m}")
    mats: dict = {}
    for ln in lines[pos:]:
        toks = ln.replace(",", " ").split()
        if len(toks) != 5:
            raise ValueError(f"bad entry line: {ln!r}")
        mat, blk, i, j = (int(t) for t in toks[:4])
        v = float(toks[4])
        if not (1 <= blk <= nblock):
            raise ValueError(f"block number out of range in line {ln!r}")
        size = abs(block_struct[blk - 1])
        if not (1 <= i <= size and 1 <= j <= size):
            raise ValueError(f"entry index out of range in line {ln!r}")
        if block_struct[blk - 1] < 0 and i != j:
            raise ValueError(f"off-diagonal entry in diagonal block: {ln!r}")
        mats.setdefault(mat, {})[(blk, i, j)] = v
    return {"m": m, "block_struct": block_struct, "c": c, "mats": mats}
