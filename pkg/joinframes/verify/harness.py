"""带种子的定律验证器

随机实例与（可选的）穷举实例分批分发到进程池（或线程池），每个实例运行所选
全部定律；报告按实例下标合并，不含时间戳，同样的配置产生逐字节相同的报告。
"""

import concurrent.futures
import logging
import math
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import yaml

from joinframes.config import Limits, get_limits, set_limits
from joinframes.errors import CapExceededError, InputError, JoinFramesError
from joinframes.frames.frame_generating import upsilon_witness
from joinframes.model.poset import Poset
from joinframes.spec.joinspec import JoinSpec, bp, u_max
from joinframes.speclattice.jf import jf_top
from joinframes.verify.generators import SplitMix64, exhaustive_posets, joinable_masks, random_joinspec, random_poset
from joinframes.verify.laws import SUITES, Law, LawInstance, LawSkipped, select_laws
from joinframes.verify.shrink import shrink_failure

logger = logging.getLogger(__name__)

# 穷举全部规格时可连接集合个数的上限
EXHAUSTIVE_SPEC_POOL = 12
# 每条定律报告并收缩的失败个数
FAILURES_PER_LAW = 5
# 每个工作者平均分到的批次数
CHUNKS_PER_WORKER = 8
EXECUTORS = ("process", "thread")

Outcome = Tuple[str, str, Optional[str]]
Task = Tuple[int, Poset, JoinSpec, JoinSpec]


@dataclass
class VerifyConfig:
    """验证配置

    Args:
        n: 随机偏序集的最大规模
        min_n: 最小规模，缺省等于 n
        samples: 随机实例个数
        seed: 64 位种子
        edge_prob: 每对 (i, j) 加边的概率，精确有理数
        spec_members: 每个随机规格抽取的非单点成员个数
        laws: 套件名或定律名，空表示全部
        exhaustive_n: 穷举到的偏序集规模，0 表示关闭
        max_workers: 工作者个数，1 表示在当前进程内顺序运行
        shrink: 是否收缩失败实例
        executor: "process"（默认，绕开 GIL）或 "thread"
    """

    n: int = 5
    min_n: Optional[int] = None
    samples: int = 200
    seed: int = 42
    edge_prob: Fraction = Fraction(1, 2)
    spec_members: int = 3
    laws: Tuple[str, ...] = ()
    exhaustive_n: int = 0
    max_workers: int = 4
    shrink: bool = True
    executor: str = "process"

    def __post_init__(self):
        if self.min_n is None:
            self.min_n = self.n
        try:
            self.edge_prob = Fraction(str(self.edge_prob))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"edge_prob '{self.edge_prob}' is not a rational number") from None
        self.laws = tuple(self.laws)
        if not 1 <= self.min_n <= self.n:
            raise InputError(f"need 1 <= min_n <= n, got min_n={self.min_n}, n={self.n}")
        if self.n > get_limits().max_n:
            raise InputError(f"n={self.n} exceeds the poset size cap {get_limits().max_n}")
        if self.samples < 0 or (self.samples == 0 and self.exhaustive_n == 0):
            raise InputError("samples must be at least 1 unless exhaustive mode is on")
        if not 0 <= self.edge_prob <= 1:
            raise InputError(f"edge_prob must lie in [0, 1], got {self.edge_prob}")
        if not 0 <= self.exhaustive_n <= 5:
            raise InputError(f"exhaustive_n must be between 0 and 5, got {self.exhaustive_n}")
        if self.spec_members < 0 or self.max_workers < 1:
            raise InputError("spec_members must be >= 0 and max_workers >= 1")
        if self.executor not in EXECUTORS:
            raise InputError(f"executor must be one of {', '.join(EXECUTORS)}, got '{self.executor}'")
        self.seed &= (1 << 64) - 1
        select_laws(self.laws)

    @classmethod
    def from_yaml(cls, path: str) -> "VerifyConfig":
        """从 YAML 文件读取配置，未知键视为错误"""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        except yaml.YAMLError as e:
            raise InputError(f"invalid YAML in {path}: {e}") from None
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerifyConfig":
        if not isinstance(data, dict):
            raise InputError("verification config must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InputError(f"unknown config keys: {', '.join(unknown)}")
        values = dict(data)
        if isinstance(values.get("laws"), str):
            values["laws"] = [s.strip() for s in values["laws"].split(",") if s.strip()]
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["edge_prob"] = str(self.edge_prob)
        data["laws"] = list(self.laws)
        return data


@dataclass
class LawTally:
    suite: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)


def describe_instance(inst: LawInstance) -> Dict[str, Any]:
    P = inst.P
    return {
        "elements": list(P.labels),
        "covers": [[P.labels[i], P.labels[j]] for i, j in P.covers],
        "U": [P.labels_of(m) for m in inst.U.nontrivial_masks()],
        "V": [P.labels_of(m) for m in inst.V.nontrivial_masks()],
    }


def random_instances(config: VerifyConfig) -> List[Tuple[Poset, JoinSpec, JoinSpec]]:
    """每个实例有自己的子种子，与线程调度无关"""
    master = SplitMix64(config.seed)
    instances = []
    for _ in range(config.samples):
        rng = SplitMix64(master.next_u64())
        n = config.min_n + rng.below(config.n - config.min_n + 1)
        P = random_poset(rng, n, config.edge_prob)
        U = random_joinspec(rng, P, config.spec_members, "U")
        V = random_joinspec(rng, P, config.spec_members, "V")
        instances.append((P, U, V))
    return instances


def _spec_pool(P: Poset) -> List[int]:
    pool = joinable_masks(P)
    return ([0] if P.bottom is not None else []) + pool


def exhaustive_instances(config: VerifyConfig) -> List[Tuple[Poset, JoinSpec, JoinSpec]]:
    """同构意义下的全部小偏序集；可连接集合不超过上限时取全部规格，V 取补族"""
    instances = []
    for n in range(1, config.exhaustive_n + 1):
        for P in exhaustive_posets(n):
            pool = _spec_pool(P)
            if len(pool) > EXHAUSTIVE_SPEC_POOL:
                instances.append((P, u_max(P).renamed("U"), bp(P).renamed("V")))
                continue
            for choice in range(1 << len(pool)):
                chosen = [m for k, m in enumerate(pool) if choice >> k & 1]
                rest = [m for k, m in enumerate(pool) if not choice >> k & 1]
                instances.append((P, JoinSpec(P, chosen, "U"), JoinSpec(P, rest, "V")))
    return instances


def run_laws(laws: List[Law], inst: LawInstance) -> List[Outcome]:
    """在一个实例上依次运行定律，返回 (定律名, 状态, 信息)"""
    outcomes = []
    for law in laws:
        try:
            message = law.check(inst)
        except (LawSkipped, CapExceededError):
            outcomes.append((law.name, "skipped", None))
            continue
        except JoinFramesError as e:
            message = f"{type(e).__name__}: {e}"
        outcomes.append((law.name, "failed" if message else "passed", message))
    return outcomes


def check_chunk(limits: Limits, law_names: List[str], chunk: List[Task]) -> List[Tuple[int, List[Outcome]]]:
    """工作者入口：恢复上限后在一批实例上运行定律"""
    set_limits(limits)
    laws = select_laws(law_names)
    return [(index, run_laws(laws, LawInstance(index, P, U, V))) for index, P, U, V in chunk]


def _chunks(tasks: List[Task], workers: int) -> List[List[Task]]:
    size = max(1, math.ceil(len(tasks) / (workers * CHUNKS_PER_WORKER)))
    return [tasks[k:k + size] for k in range(0, len(tasks), size)]


def top_is_union_of_frame_generating(P: Poset) -> Optional[bool]:
    """U_max⁻ 等于全部框架生成规格的并；规格太多时返回 None"""
    pool = _spec_pool(P)
    if len(pool) > EXHAUSTIVE_SPEC_POOL:
        return None
    union = set()
    for choice in range(1 << len(pool)):
        spec = JoinSpec(P, [m for k, m in enumerate(pool) if choice >> k & 1])
        if upsilon_witness(spec) is None:
            union |= spec.mask_set
    return union == jf_top(P).mask_set


class VerificationHarness:
    """验证器

    Args:
        config: 验证配置
    """

    def __init__(self, config: VerifyConfig):
        self.config = config
        self.laws = select_laws(config.laws)
        self.logger = logging.getLogger(__name__)

    def run(self) -> Dict[str, Any]:
        """运行全部实例并返回确定性的报告"""
        config = self.config
        start_time = time.time()
        raw = random_instances(config) + exhaustive_instances(config)
        instances = [LawInstance(i, P, U, V) for i, (P, U, V) in enumerate(raw)]
        self.logger.info(f"Verifying {len(self.laws)} laws on {len(instances)} instances")

        results: List[Optional[List[Outcome]]] = [None] * len(instances)
        if config.max_workers == 1:
            for inst in instances:
                results[inst.index] = run_laws(self.laws, inst)
        else:
            self._run_pool([(i, P, U, V) for i, (P, U, V) in enumerate(raw)], results)

        tallies: Dict[str, LawTally] = {law.name: LawTally(law.suite) for law in self.laws}
        by_name = {law.name: law for law in self.laws}
        for inst, outcomes in zip(instances, results):
            for name, status, message in outcomes:
                tally = tallies[name]
                setattr(tally, status, getattr(tally, status) + 1)
                if status == "failed" and len(tally.failures) < FAILURES_PER_LAW:
                    tally.failures.append(self._failure_entry(by_name[name], inst, message))

        report: Dict[str, Any] = {
            "config": config.to_dict(),
            "instances": len(instances),
            "laws": {
                name: {"suite": t.suite, "passed": t.passed, "failed": t.failed, "skipped": t.skipped}
                for name, t in tallies.items()
            },
            "failures": [entry for t in tallies.values() for entry in t.failures],
        }
        if config.exhaustive_n:
            report["poset_laws"] = self._poset_laws()
        report["ok"] = not report["failures"] and all(
            v["failed"] == 0 for v in report.get("poset_laws", {}).values()
        )
        failed = sum(t.failed for t in tallies.values())
        self.logger.info(
            f"Verification finished in {time.time() - start_time:.2f}s, {failed} law failures"
        )
        return report

    def _run_pool(self, tasks: List[Task], results: List[Optional[List[Outcome]]]) -> None:
        config = self.config
        pool = (
            concurrent.futures.ProcessPoolExecutor
            if config.executor == "process"
            else concurrent.futures.ThreadPoolExecutor
        )
        names = [law.name for law in self.laws]
        with pool(max_workers=config.max_workers) as executor:
            future_to_task = {
                executor.submit(check_chunk, get_limits(), names, chunk): k
                for k, chunk in enumerate(_chunks(tasks, config.max_workers))
            }
            for future in concurrent.futures.as_completed(future_to_task):
                for index, outcomes in future.result():
                    results[index] = outcomes

    def _failure_entry(self, law: Law, inst: LawInstance, message: Optional[str]) -> Dict[str, Any]:
        entry = {
            "law": law.name,
            "suite": law.suite,
            "instance": inst.index,
            "message": message,
            "witness": describe_instance(inst),
        }
        if self.config.shrink:
            fresh = LawInstance(inst.index, inst.P, inst.U, inst.V)
            entry["shrunk"] = describe_instance(shrink_failure(law, fresh))
        self.logger.warning(f"law {law.name} fails on instance {inst.index}: {message}")
        return entry

    def _poset_laws(self) -> Dict[str, Dict[str, int]]:
        tally = {"passed": 0, "failed": 0, "skipped": 0}
        for n in range(1, self.config.exhaustive_n + 1):
            for P in exhaustive_posets(n):
                verdict = top_is_union_of_frame_generating(P)
                key = "skipped" if verdict is None else ("passed" if verdict else "failed")
                tally[key] += 1
        return {"top_is_union_of_frame_generating": tally}


def verify_theorems(config: Optional[VerifyConfig] = None) -> Dict[str, Any]:
    """按配置运行验证器

    Args:
        config: 验证配置，缺省为 VerifyConfig()

    Returns:
        Dict[str, Any]: 报告，"ok" 为全部定律成立
    """
    return VerificationHarness(config or VerifyConfig()).run()


__all__ = ["VerifyConfig", "VerificationHarness", "verify_theorems", "run_laws", "check_chunk", "SUITES"]
