from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from ..topology import bits
from ..topology.space import FiniteSpace


class AxiomStatus(Enum):
    HOLDS = "holds"
    FAILS = "fails"


class AxiomVerdict(BaseModel):
    """
    Outcome of one axiom check.

    Witness values are subsets as bit-vectors. Upper-case keys (A, B, C) name sets,
    lower-case keys (x, y) name points stored as singletons.
    """

    model_config = ConfigDict(frozen=True)

    axiom: str
    status: AxiomStatus
    witness: Optional[Dict[str, int]] = None
    informational: bool = False

    @property
    def holds(self) -> bool:
        return self.status == AxiomStatus.HOLDS

    def render(self, space: FiniteSpace) -> Dict[str, Any]:
        rendered: Dict[str, Any] = {"axiom": self.axiom, "status": self.status.value}
        if self.informational:
            rendered["informational"] = True
        if self.witness is not None:
            rendered["witness"] = {
                key: space.labels[next(bits.members(value))] if key.islower() else space.render(value)
                for key, value in self.witness.items()
            }
        return rendered


class AuditReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: str
    kind: Optional[str] = None
    verdicts: List[AxiomVerdict]

    def verdict(self, axiom: str) -> AxiomVerdict:
        for verdict in self.verdicts:
            if verdict.axiom == axiom:
                return verdict
        raise KeyError(f"Axiom {axiom} was not audited")

    def holds(self, *axioms: str) -> bool:
        return all(self.verdict(axiom).holds for axiom in axioms)

    def failures(self) -> List[AxiomVerdict]:
        return [verdict for verdict in self.verdicts if not verdict.holds and not verdict.informational]

    def merge(self, other: "AuditReport") -> "AuditReport":
        if other.space != self.space:
            raise ValueError("Cannot merge audits of different spaces")
        if self.kind and other.kind and self.kind != other.kind:
            raise ValueError("Cannot merge audits of different proximities")
        return AuditReport(space=self.space, kind=self.kind or other.kind, verdicts=[*self.verdicts, *other.verdicts])

    def render(self, space: FiniteSpace) -> List[Dict[str, Any]]:
        return [verdict.render(space) for verdict in self.verdicts]
