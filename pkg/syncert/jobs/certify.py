from pathlib import Path

from loguru import logger

from syncert.analysis.admittance import (
    FrequencySweepReport,
    GeneralNetwork,
    LcNetwork,
    general_sync_check,
    lc_sync_check,
    lc_to_general,
)
from syncert.analysis.certify import SyncVerdict, observability_check, pbh_check
from syncert.analysis.errors import UnsupportedMethodError
from syncert.analysis.network import OscillatorArray, build_laplacians, damper_connectivity
from syncert.analysis.sufficient import sufficient_check
from syncert.configs.jobs.certify import CertifyJobConfig, CertifyMethod
from syncert.configs.tolerances import Tolerances
from syncert.jobs.common import CertifyResult
from syncert.jobs.utils import save_text, timer
from syncert.schemas.reports import (
    CrossCheckModel,
    FrequencyModel,
    Report,
    SufficientModel,
    Verdict,
    certificate_model,
)


def _cross_check(reference: bool, other: SyncVerdict) -> CrossCheckModel:
    agrees = reference == other.synchronizes
    if not agrees:
        logger.error(
            f"{other.method.value} verdict ({other.synchronizes}) disagrees with PBH ({reference})"
        )
    return CrossCheckModel(
        method=other.method.value, verdict=Verdict.from_bool(other.synchronizes), agrees=agrees
    )


def verdict_report(verdict: SyncVerdict, **fields) -> Report:
    return Report(
        verdict=Verdict.from_bool(verdict.synchronizes),
        method=verdict.method.value,
        certificate=certificate_model(verdict.certificate),
        marginal=verdict.marginal,
        **fields,
    )


@timer
def certify_array(
    array: OscillatorArray, method: CertifyMethod, tolerances: Tolerances, **fields
) -> Report:
    """Report on a mechanical array (or the mechanical twin of an LC network)."""
    L = build_laplacians(array)
    fields["damper_graph_connected"] = damper_connectivity(array, tolerances).graph_connected
    fields["tolerances"] = Report.tolerance_table(tolerances)

    match method:
        case CertifyMethod.PBH:
            return verdict_report(pbh_check(L, tolerances), **fields)
        case CertifyMethod.OBSERVABILITY:
            return verdict_report(observability_check(L, tolerances), **fields)
        case CertifyMethod.SUFFICIENT:
            sufficient = sufficient_check(array, tolerances)
            verdict = Verdict.SYNCHRONIZES if sufficient.overall else Verdict.INCONCLUSIVE
            return Report(
                verdict=verdict,
                method=method.value,
                sufficient=SufficientModel.from_report(sufficient),
                **fields,
            )
        case CertifyMethod.ALL:
            reference = pbh_check(L, tolerances)
            observability = observability_check(L, tolerances)
            cross_checks = [_cross_check(reference.synchronizes, observability)]
            sufficient = sufficient_check(array, tolerances)
            if sufficient.overall and not reference.synchronizes:
                logger.error("Sufficient conditions hold for an array that fails the PBH test")
            return verdict_report(
                reference,
                sufficient=SufficientModel.from_report(sufficient),
                cross_checks=cross_checks,
                **fields,
            )
        case _:
            raise ValueError(f"Unknown certification method: {method}")


def certify_lc(
    net: LcNetwork, method: CertifyMethod, tolerances: Tolerances, **fields
) -> Report:
    """Mechanical-twin report, extended with the frequency probes when all methods run."""
    report, _ = certify_array(net.equivalent_array(), method, tolerances, **fields)
    if method != CertifyMethod.ALL:
        return report

    lc_verdict, sweep_report = lc_sync_check(net, tolerances=tolerances)
    general_verdict, _ = general_sync_check(lc_to_general(net), tolerances)
    synchronizes = report.verdict == Verdict.SYNCHRONIZES
    checks = [*report.cross_checks] + [
        _cross_check(synchronizes, other) for other in (lc_verdict, general_verdict)
    ]
    return report.model_copy(
        update={"cross_checks": checks, "frequency": FrequencyModel.from_report(sweep_report)}
    )


def frequency_report(verdict: SyncVerdict, checked: FrequencySweepReport, **fields) -> Report:
    """Report on an admittance check.

    A synchronization verdict rests on passivity; with violations on the grid it becomes
    inconclusive. A failure certificate stays valid either way.
    """
    report = verdict_report(verdict, frequency=FrequencyModel.from_report(checked), **fields)
    if verdict.synchronizes and checked.passivity_violations:
        logger.warning("Network is not passive on the sweep grid; synchronization is unverified")
        return report.model_copy(update={"verdict": Verdict.INCONCLUSIVE})
    return report


def certify_general(net: GeneralNetwork, tolerances: Tolerances, **fields) -> Report:
    verdict, checked = general_sync_check(net, tolerances)
    return frequency_report(
        verdict, checked, tolerances=Report.tolerance_table(tolerances), **fields
    )


def run_certify(config: CertifyJobConfig) -> CertifyResult:
    network_file = config.load_network()
    network = network_file.to_domain()
    fields = {"network": config.network, "kind": network_file.kind, "q": network_file.q}
    logger.info(f"Certifying {config.network} with method '{config.method.value}'")

    match network:
        case OscillatorArray() as array:
            report, _ = certify_array(array, config.method, config.tolerances, **fields)
        case LcNetwork() as net:
            report = certify_lc(net, config.method, config.tolerances, **fields)
        case GeneralNetwork() as net:
            if config.method != CertifyMethod.ALL:
                raise UnsupportedMethodError(
                    f"Method '{config.method.value}' needs a mechanical or LC network; "
                    "general networks are decided by the admittance test (--method all)."
                )
            report = certify_general(net, config.tolerances, **fields)
        case _:
            raise ValueError(f"Invalid network for certification: {type(network)}")

    path = None
    if config.output_path is not None:
        path = save_text(report.to_machine(), Path(config.output_path))
    logger.info(f"Verdict: {report.verdict.value} ({report.method})")
    return CertifyResult(output_path=path, report=report)
