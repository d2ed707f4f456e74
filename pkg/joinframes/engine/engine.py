"""核心引擎模块"""

import logging
import re
from typing import Any, Dict, List, Optional, Sequence

from joinframes.errors import InputError
from joinframes.frames.distributivity import find_pentagon, is_distributive, is_modular
from joinframes.frames.frame_generating import METHODS, is_frame_generating, upsilon_witness
from joinframes.frames.ideals import IdealLattice, ideal_lattice
from joinframes.model.maps import PosetMap, parse_assignment
from joinframes.model.poset import Poset
from joinframes.model.workspace import Workspace
from joinframes.morphisms.lifts import continuity_check, is_u_morphism, lift
from joinframes.parsers import load_workspace
from joinframes.spec.joinspec import JoinSpec, bp, u_infty, u_max, uplus_masks
from joinframes.speclattice.jf import (
    is_maximal,
    jf_bottoms,
    jf_join,
    jf_meet,
    jf_top,
    jfplus_join,
    jfplus_meet,
    maximality_witness,
)
from joinframes.speclattice.pruning import uminus
from joinframes.verify.harness import VerifyConfig, verify_theorems

logger = logging.getLogger(__name__)

# 内置规格名
BUILTIN_SPECS = {
    "@B": ("B_P", bp),
    "@inf": ("U_inf", u_infty),
    "@max": ("U_max", u_max),
}

SET_SEPARATOR = re.compile(r"[\s,]+")


def _members(P: Poset, spec: JoinSpec) -> List[List[str]]:
    return [P.labels_of(m) for m in spec.nontrivial_masks()]


class Engine:
    """核心引擎类，CLI 各命令的实现；每个操作返回带 "ok" 键的结果字典"""

    def __init__(self):
        self.supported_commands = {
            "validate": "parse a workspace and summarise its join-specifications",
            "closure": "smallest U-ideal containing a set",
            "upsilon": "one-step join closure of a set",
            "ideals": "the lattice of U-ideals",
            "frame-generating": "decide whether the ideal lattice is a frame",
            "uplus": "maximal specification with the same ideals, or membership of one set",
            "uminus": "largest frame-generating sub-specification",
            "meet": "meet in JF or JF+",
            "join": "join in JF or JF+",
            "top": "top and bottoms of JF and JF+",
            "maximal": "whether a specification equals its U+",
            "lift": "lift a monotone map to the ideal lattices",
            "verify": "seeded law verification",
            "export": "export a workspace or an ideal lattice",
        }

    def load(self, path: str) -> Workspace:
        workspace = load_workspace(path)
        logger.info(f"loaded {path}: {workspace!r}")
        return workspace

    def resolve_spec(self, workspace: Workspace, name: str) -> JoinSpec:
        """按名称取规格；@B、@inf、@max 为内置规格"""
        if name in BUILTIN_SPECS:
            label, build = BUILTIN_SPECS[name]
            return build(workspace.poset).renamed(label)
        return workspace.get_spec(name)

    def parse_set(self, workspace: Workspace, text: Optional[str]) -> int:
        """"a b c" 或 "a,b,c"；空串表示 ∅"""
        if text is None:
            raise InputError("this command needs --set")
        labels = [t for t in SET_SEPARATOR.split(text.strip().strip("{}")) if t]
        return workspace.poset.mask_of(labels)

    def validate(self, workspace: Workspace) -> Dict[str, Any]:
        """解析工作区并逐个判定规格"""
        P = workspace.poset
        rows = []
        for name, spec in workspace.specs.items():
            fg = upsilon_witness(spec) is None
            rows.append({
                "spec": name,
                "line": workspace.provenance.get(name),
                "members": len(spec.nontrivial_masks()),
                "frame_generating": fg,
            })
        return {
            "ok": True,
            "poset": workspace.name,
            "elements": list(P.labels),
            "covers": len(P.covers),
            "lattice": P.is_lattice(),
            "bottom": None if P.bottom is None else P.labels[P.bottom],
            "top": None if P.top is None else P.labels[P.top],
            "rows": rows,
        }

    def closure(self, workspace: Workspace, spec_name: str, set_text: str) -> Dict[str, Any]:
        P = workspace.poset
        spec = self.resolve_spec(workspace, spec_name)
        S = self.parse_set(workspace, set_text)
        closed = spec.gamma_mask(S)
        return {
            "ok": True,
            "spec": spec.name,
            "set": P.labels_of(S),
            "closure": P.labels_of(closed),
            "is_ideal": closed == S,
        }

    def upsilon(self, workspace: Workspace, spec_name: str, set_text: str) -> Dict[str, Any]:
        P = workspace.poset
        spec = self.resolve_spec(workspace, spec_name)
        S = self.parse_set(workspace, set_text)
        result = spec.upsilon_mask(S)
        return {
            "ok": True,
            "spec": spec.name,
            "set": P.labels_of(S),
            "upsilon": P.labels_of(result),
            "downclosed": P.is_downclosed(result),
        }

    def ideals(self, workspace: Workspace, spec_name: str) -> IdealLattice:
        return ideal_lattice(self.resolve_spec(workspace, spec_name))

    def ideals_report(self, lattice: IdealLattice) -> Dict[str, Any]:
        """理想列表以及格的分配性、模性"""
        P = lattice.owner
        pentagon = find_pentagon(lattice)
        return {
            "ok": True,
            "spec": lattice.spec.name,
            "count": lattice.size,
            "distributive": is_distributive(lattice),
            "modular": is_modular(lattice),
            "pentagon": None if pentagon is None else [lattice.label(x) for x in pentagon],
            "rows": [P.labels_of(C) for C in lattice.sets],
        }

    def frame_generating(self, workspace: Workspace, spec_name: str, method: str = "5") -> Dict[str, Any]:
        if method != "all" and method not in METHODS:
            raise InputError(f"unknown method '{method}', expected one of {', '.join(METHODS)} or all")
        report = is_frame_generating(self.resolve_spec(workspace, spec_name), method)
        result = report.to_dict()
        result["ok"] = report.verdict
        return result

    def uplus(self, workspace: Workspace, spec_name: str, set_text: Optional[str] = None) -> Dict[str, Any]:
        """给出 --set 时判定成员关系，否则列出 U⁺ 中的非平凡集合"""
        P = workspace.poset
        spec = self.resolve_spec(workspace, spec_name)
        if set_text is not None:
            T = self.parse_set(workspace, set_text)
            member = spec.in_uplus_mask(T)
            return {"ok": member, "spec": spec.name, "set": P.labels_of(T), "in_uplus": member}
        masks = [m for m in uplus_masks(spec) if m & (m - 1) or m == 0]
        added = [P.labels_of(m) for m in masks if m not in spec.mask_set]
        return {
            "ok": True,
            "spec": spec.name,
            "maximal": not added,
            "added": added,
            "rows": [P.labels_of(m) for m in masks],
        }

    def uminus(self, workspace: Workspace, spec_name: str) -> Dict[str, Any]:
        P = workspace.poset
        spec = self.resolve_spec(workspace, spec_name)
        pruned = uminus(spec)
        return {
            "ok": True,
            "spec": spec.name,
            "removed": [P.labels_of(m) for m in spec.nontrivial_masks() if m not in pruned.mask_set],
            "rows": _members(P, pruned),
        }

    def combine(self, workspace: Workspace, spec_names: Sequence[str], operation: str,
                lattice: str = "jf") -> Dict[str, Any]:
        """JF 或 JF⁺ 中的 meet / join"""
        if lattice not in ("jf", "jf+"):
            raise InputError(f"unknown lattice '{lattice}', expected jf or jf+")
        if not spec_names:
            raise InputError("this command needs --specs")
        specs = [self.resolve_spec(workspace, name) for name in spec_names]
        functions = {
            ("meet", "jf"): jf_meet,
            ("join", "jf"): jf_join,
            ("meet", "jf+"): jfplus_meet,
            ("join", "jf+"): jfplus_join,
        }
        result = functions[(operation, lattice)](specs)
        return {
            "ok": True,
            "operation": operation,
            "in": lattice,
            "specs": list(spec_names),
            "rows": _members(workspace.poset, result),
        }

    def top(self, workspace: Workspace) -> Dict[str, Any]:
        P = workspace.poset
        top = jf_top(P)
        bottom, bottom_plus = jf_bottoms(P)
        return {
            "ok": True,
            "top_is_maximal": is_maximal(top),
            "jf_bottom": _members(P, bottom),
            "jfplus_bottom": _members(P, bottom_plus),
            "rows": _members(P, top),
        }

    def maximal(self, workspace: Workspace, spec_name: str) -> Dict[str, Any]:
        spec = self.resolve_spec(workspace, spec_name)
        witness = maximality_witness(spec)
        return {
            "ok": witness is None,
            "spec": spec.name,
            "maximal": witness is None,
            "witness": None if witness is None else workspace.poset.labels_of(witness),
        }

    def lift(self, source: Workspace, target: Workspace, map_text: str,
             spec_name: str = "@max", cod_spec_name: str = "@max") -> Dict[str, Any]:
        """f⁺: I_{U_P} → I_{U_Q}；报告连续性与 f⁺ 的保持性质"""
        if not map_text:
            raise InputError("this command needs --map")
        f = PosetMap.from_labels(source.poset, target.poset, parse_assignment(map_text))
        U_P = self.resolve_spec(source, spec_name)
        U_Q = self.resolve_spec(target, cod_spec_name)
        morphism = is_u_morphism(f, U_P)
        if not morphism:
            return {"ok": False, "u_morphism": False, "map": f.as_labels()}
        lifted = lift(f, U_P, U_Q)
        flags = lifted.flags()
        return {
            "ok": flags["join_preserving"],
            "u_morphism": True,
            "embedding": f.is_embedding(),
            "continuous": continuity_check(f, U_P, U_Q),
            "map": f.as_labels(),
            "flags": flags,
            "rows": [
                {"ideal": lifted.dom.label(x), "image": lifted.cod.label(lifted(x))}
                for x in range(lifted.dom.size)
            ],
        }

    def verify(self, config: VerifyConfig) -> Dict[str, Any]:
        return verify_theorems(config)

    def get_supported_commands(self) -> Dict[str, str]:
        """获取支持的命令

        Returns:
            命令说明字典
        """
        return self.supported_commands


__all__ = ["Engine", "BUILTIN_SPECS"]
