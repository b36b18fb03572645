"""Regenerate the Pocket Cube fixture files from the geometric sticker model."""

from pathlib import Path

from lagrange.cube import pocket_cube_group, step_by_step_chain, two_level_chain
from lagrange.formats import format_chain, format_group

HEADER = """Pocket Cube (2x2x2), 24 stickers; corner k owns stickers 3k+1..3k+3.
Generators: quarter turns of R, L, U, D, F, B."""

out = Path(__file__).resolve().parent.parent / "fixtures"
G = pocket_cube_group()
(out / "pocket_cube.group").write_text(format_group(G, HEADER))
(out / "pocket_cube_steps.chain").write_text(
    format_chain(step_by_step_chain(G), "total",
                 HEADER + "\nPlace and orient one corner at a time: S8 C3 S7 C3 ... C2 C3.")
)
(out / "pocket_cube_two_level.chain").write_text(
    format_chain(two_level_chain(G), "total",
                 HEADER + "\nCorner positions on top, the corner twist subgroup below.")
)
# one sticker per corner: fixing it fixes that corner's position and twist
stab = format_group(G, HEADER + "\nStabilizer descent through one sticker per corner.")
stab = stab.replace("degree:", "kind: total\ndegree:", 1)
stab += "".join(f"---\nstabilizer: {' '.join(map(str, range(1, k + 1)))}\n" for k in (1, 4, 7, 10, 13, 16, 19))
(out / "pocket_cube_stabilizer.chain").write_text(stab)
