from dataclasses import dataclass

from .errors import InvariantViolation

STAT_KEYS = ("nd", "ne", "nv", "nf", "nc", "ec", "genus", "planar")


@dataclass(frozen=True)
class MapStats:
    nd: int
    ne: int
    nv: int
    nf: int
    nc: int
    ec: int
    genus: int
    planar: bool

    @classmethod
    def from_counts(cls, nd, ne, nv, nf, nc):
        ec = nv + ne + nf - nd
        # Genus Theorem: ec is even under inv_hmap, so halving must be exact.
        if ec % 2:
            raise InvariantViolation(f"odd Euler characteristic {ec} (nd={nd} ne={ne} nv={nv} nf={nf})")
        genus = nc - ec // 2
        return cls(nd, ne, nv, nf, nc, ec, genus, genus == 0)

    def as_dict(self):
        return {key: getattr(self, key) for key in STAT_KEYS}
