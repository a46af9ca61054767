"""
命令行入口
construct / analyze / certify / enumerate / simulate / sweep

退出码：0成功，1 I/O错误，2参数错误，3输入格式错误，4违反存储码模型
"""

import functools
import json
import sys
from typing import Any, Callable, Optional

import click

from src.analysis.reports import analyze_graph, certify_graph
from src.analysis.sweep import rows_to_csv, run_sweep
from src.codes.oracles import MAX_BRUTE_FORCE_BITS, exhaustive_codewords
from src.codes.storage_code import build_code, enumerate_codewords
from src.config.settings import settings
from src.errors import ParameterError, StorageCodeError
from src.fileio.formats import format_codewords, format_graph, parse_codeword
from src.fileio.handler import artifact_handler
from src.graphs.constructions import clique_partition, complete, connected_chain, random_bounded_degree
from src.graphs.model import Graph
from src.simulation.repair_sim import SimConfig, run_sim
from src.utils.console import console

FAMILIES = ("clique", "chain", "complete", "random")


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """把业务异常转换为对应的退出码"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except StorageCodeError as e:
            console.error(str(e))
            sys.exit(e.exit_code)
        except OSError as e:
            console.error(f"文件读写失败: {e}")
            sys.exit(1)

    return wrapper


def _emit(text: str) -> None:
    click.echo(text, nl=not text.endswith("\n"))


def _load_graph(path: str) -> Graph:
    g = artifact_handler.load_graph(path)
    console.debug(f"读取图 {path}: n={g.n}, |E|={g.edge_count}")
    return g


def build_family(family: str, n: int, r: Optional[int], seed: int) -> Graph:
    """
    按图族名构造图

    Raises:
        ParameterError: 缺少r或参数越界
    """
    if family == "complete":
        return complete(n)
    if r is None:
        raise ParameterError(f"图族{family}需要参数r")
    if family == "clique":
        return clique_partition(n, r)
    if family == "chain":
        return connected_chain(n, r)
    return random_bounded_degree(n, r, seed)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="在stdout输出JSON")
@click.option("--verbose", is_flag=True, help="输出调试信息")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, verbose: bool) -> None:
    """图上二元存储码工具集"""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    console.verbose = verbose or settings.verbose


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("n", type=int)
@click.argument("r", type=int, required=False)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "dot"]), default="edgelist", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="输出文件")
@click.option("--seed", type=int, default=None, help="random图族的种子")
@handle_errors
def construct(
    family: str, n: int, r: Optional[int], fmt: str, out: Optional[str], seed: Optional[int]
) -> None:
    """构造图族：clique | chain | complete | random"""
    seed = settings.default_seed if seed is None else seed
    console.step(f"构造 {family} 图: n={n}, r={r}")
    g = build_family(family, n, r, seed)
    text = format_graph(g, fmt)
    if out:
        path = artifact_handler.save_text(text, out, artifact_type="graph")
        console.success(f"图已保存: {path} (|E|={g.edge_count})")
    else:
        _emit(text)


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), help="报告JSON文件")
@click.pass_context
@handle_errors
def analyze(ctx: click.Context, graph_file: str, out: Optional[str]) -> None:
    """计算秩、维数、精确码率与容量上下界"""
    _, report = analyze_graph(_load_graph(graph_file))
    if out:
        path = artifact_handler.save_model(report, out, artifact_type="report")
        console.success(f"报告已保存: {path}")
    if ctx.obj["json"]:
        _emit(report.model_dump_json(indent=2))
        return
    rate = report.rate
    _emit(f"n={report.n} r={report.max_degree} connected={str(report.connected).lower()}")
    _emit(f"rank={report.rank} dimension={report.dimension} rate={rate.numerator}/{rate.denominator}")
    if report.bounds is not None:
        _emit(f"bounds=[{report.bounds.lower}, {report.bounds.upper}]")


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), help="证书JSON文件")
@click.pass_context
@handle_errors
def certify(ctx: click.Context, graph_file: str, out: Optional[str]) -> None:
    """生成并校验贪心秩证书，输出码率上界"""
    report = certify_graph(_load_graph(graph_file))
    if out:
        path = artifact_handler.save_model(report, out, artifact_type="certificate")
        console.success(f"证书已保存: {path}")
    if ctx.obj["json"]:
        _emit(report.model_dump_json(indent=2))
    else:
        _emit(f"certificate size={report.certificate.size} verified={str(report.verified).lower()}")
        _emit(report.verdict_line())
        _emit(f"rate ≥ 1 - {report.distinct_rows}/{report.n}")
    if not report.verified:
        console.error("证书校验失败")
        sys.exit(4)


@cli.command(name="enumerate")
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--limit", type=int, default=None, help="码字数上限")
@click.option("--verify", is_flag=True, help=f"与穷举搜索交叉校验（n ≤ {MAX_BRUTE_FORCE_BITS}）")
@click.option("--out", type=click.Path(dir_okay=False), help="码字列表文件")
@click.pass_context
@handle_errors
def enumerate_cmd(ctx: click.Context, graph_file: str, limit: Optional[int], verify: bool, out: Optional[str]) -> None:
    """列出全部码字，每行一个"""
    code = build_code(_load_graph(graph_file))
    limit = settings.enum_limit if limit is None else limit
    codewords = enumerate_codewords(code, limit)
    console.info(f"共 {len(codewords)} 个码字 (dimension={code.dimension})")

    if verify:
        expected = sorted(c.to_string() for c in exhaustive_codewords(code.graph))
        if sorted(c.to_string() for c in codewords) != expected:
            raise StorageCodeError("枚举结果与穷举搜索不一致")
        console.success("与穷举搜索一致")

    text = format_codewords(codewords)
    if out:
        path = artifact_handler.save_text(text, out, artifact_type="codewords")
        console.success(f"码字已保存: {path}")
    if ctx.obj["json"]:
        _emit(json.dumps([c.to_string() for c in codewords]))
    elif not out:
        _emit(text)


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--failures", type=int, default=10, show_default=True, help="注入的失效次数")
@click.option("--seed", type=int, default=None, help="随机种子")
@click.option("--message", type=str, default=None, help="待编码消息（'0'/'1'字符串）")
@click.option("--corrupt-vertex", type=int, default=None, help="测试模式：先翻转该服务器的比特")
@click.option("--out", type=click.Path(dir_okay=False), help="报告JSON文件")
@click.pass_context
@handle_errors
def simulate(
    ctx: click.Context,
    graph_file: str,
    failures: int,
    seed: Optional[int],
    message: Optional[str],
    corrupt_vertex: Optional[int],
    out: Optional[str],
) -> None:
    """模拟单服务器失效与局部修复"""
    code = build_code(_load_graph(graph_file))
    cfg = SimConfig(
        code=code,
        failure_count=failures,
        seed=settings.default_seed if seed is None else seed,
        message=None if message is None else parse_codeword(message, code.dimension),
        corrupt_vertex=corrupt_vertex,
    )
    report = run_sim(cfg)
    if out:
        path = artifact_handler.save_model(report, out, artifact_type="report")
        console.success(f"模拟报告已保存: {path}")
    _emit(report.model_dump_json(indent=2) if ctx.obj["json"] else report.summary_line())
    if not report.all_correct:
        console.error("存在修复错误的事件")
        sys.exit(4)


@cli.command()
@click.argument("n_min", type=int)
@click.argument("n_max", type=int)
@click.option("--r-rule", default="sqrt", show_default=True, help="const:<k> | sqrt | log")
@click.option("--out", type=click.Path(dir_okay=False), help="CSV文件")
@click.option("--workers", type=int, default=None, help="并行进程数")
@click.option("--no-chain", is_flag=True, help="不计算连通链式构造")
@handle_errors
def sweep(
    n_min: int,
    n_max: int,
    r_rule: str,
    out: Optional[str],
    workers: Optional[int],
    no_chain: bool,
) -> None:
    """在一段码长上比较构造码率与容量上下界"""
    rows = run_sweep(
        n_min,
        n_max,
        r_rule,
        workers=settings.sweep_workers if workers is None else workers,
        with_chain=not no_chain,
    )
    text = rows_to_csv(rows)
    if out:
        path = artifact_handler.save_text(text, out, artifact_type="sweep")
        console.success(f"扫描结果已保存: {path}")
    else:
        _emit(text)


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
