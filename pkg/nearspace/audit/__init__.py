from .axioms import audit_all, audit_almost, audit_compatibility, audit_ef, audit_kuratowski, audit_lodato
from .report import AuditReport, AxiomStatus, AxiomVerdict

__all__ = [
    "AuditReport",
    "AxiomStatus",
    "AxiomVerdict",
    "audit_all",
    "audit_almost",
    "audit_compatibility",
    "audit_ef",
    "audit_kuratowski",
    "audit_lodato",
]
