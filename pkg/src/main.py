import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Tuple

from config.settings import DEFAULT_SEED, ENCODER_SAMPLES, LOG_LEVEL, MAX_SIM_QUBITS, OUTPUT_DIR, SCALING_SIZES
from src.analysis.metrics import DepthMetrics
from src.analysis.verification import FAULTS, SUITES, Verifier
from src.analysis.visualizer import DepthVisualizer
from src.errors import ToricGraphError
from src.graphs.graph_states import Adjacency, Graph
from src.lattice.toric import LatticeParams
from src.reduction.decomposition import LAYERS, coord_labels, decompose_adjacency, decomposition_dot
from src.reduction.standard_form import reduce_to_graph
from src.synthesis.circuit import Circuit
from src.synthesis.synthesizer import SCHEDULES, CircuitSynthesizer

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

logger = logging.getLogger(__name__)


def setup_logging(level: str = LOG_LEVEL, log_dir: str = OUTPUT_DIR):
    """Set up logging configuration."""
    os.makedirs(log_dir, exist_ok=True)

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(os.path.join(log_dir, 'toric_graph.log')),
            logging.StreamHandler()
        ],
        force=True
    )


def write_json(data: Dict, path: str) -> None:
    with open(path, 'w') as f:
        json.dump(data, f, sort_keys=True, indent=2)
        f.write('\n')
    logger.info(f"Wrote {path}")


def write_text(text: str, path: str) -> None:
    with open(path, 'w') as f:
        f.write(text if text.endswith('\n') else text + '\n')
    logger.info(f"Wrote {path}")


def graph_document(L: int, include_trace: bool = False) -> Tuple[Dict, Adjacency]:
    """Adjacency of the toric graph plus its three decomposition layers."""
    p = LatticeParams(L)
    adjacency, trace = reduce_to_graph(p)
    layers = decompose_adjacency(adjacency, p)
    document = {
        'L': L,
        'n_qubits': p.n_qubits,
        'edge_count': adjacency.edge_count(),
        'edges': [list(e) for e in adjacency.edges()],
        'labels': {str(k): v for k, v in coord_labels(p).items()},
        'layers': {name: [list(e) for e in layer.edges()] for name, layer in zip(LAYERS, layers)},
    }
    if include_trace:
        document['trace'] = trace.to_dict()
    return document, adjacency


def cmd_graph(args) -> int:
    document, adjacency = graph_document(args.L, include_trace=args.trace)
    stem = os.path.join(args.out, f"toric_graph_L{args.L}")
    if args.format in ('json', 'all'):
        write_json(document, stem + '.json')
    if args.format in ('dot', 'all'):
        write_text(decomposition_dot(adjacency, LatticeParams(args.L), name=f"toric_L{args.L}"), stem + '.dot')
    if args.format in ('edges', 'all'):
        write_text(Graph.from_adjacency(adjacency).edge_list_text(), stem + '.edges')
    print(f"L={args.L}: {document['n_qubits']} vertices, {document['edge_count']} edges")
    return EXIT_OK


def build_circuit(kind: str, size: int, schedule: str):
    synthesizer = CircuitSynthesizer()
    if kind == 'star':
        return synthesizer.synth_star(size)
    if kind == 'half':
        return synthesizer.synth_half(size, schedule)
    if kind == 'toric':
        return synthesizer.synth_toric(LatticeParams(size), schedule)
    return synthesizer.synth_encoder(LatticeParams(size))


def circuit_document(kind: str, size: int, schedule: str) -> Tuple[Dict, Circuit]:
    circuit = build_circuit(kind, size, schedule)
    return {
        'kind': kind,
        'size': size,
        'schedule': schedule,
        'circuit': circuit.to_dict(),
        'depth': circuit.depth_report().to_dict(),
    }, circuit


def cmd_circuit(args) -> int:
    size = {'star': args.m, 'half': args.n}.get(args.kind, args.L)
    if size is None:
        raise ToricGraphError(f"circuit {args.kind} needs a size")
    document, circuit = circuit_document(args.kind, size, args.schedule)
    stem = os.path.join(args.out, f"circuit_{args.kind}_{size}")
    write_json(document, stem + '.json')
    write_text(circuit.to_qasm(), stem + '.qasm')
    report = document['depth']
    print(
        f"{args.kind} size {size}: depth {report['total']}, {report['non_h']} non-H layers, "
        f"gates {report['gates_by_kind']}"
    )
    return EXIT_OK


def _check_verify_sizes(args) -> None:
    if args.scope in ('encode', 'all') and args.samples < 1:
        raise ToricGraphError(f"--samples must be at least 1, got {args.samples}")
    if args.scope in ('state', 'encode', 'all') and 2 * args.L * args.L > MAX_SIM_QUBITS:
        raise ToricGraphError(f"L={args.L} needs {2 * args.L * args.L} qubits, above the cap of {MAX_SIM_QUBITS}")
    if args.scope in ('distance', 'all') and (args.m < 2 or args.m * args.m > MAX_SIM_QUBITS):
        raise ToricGraphError(f"m={args.m} needs {args.m * args.m} qubits; choose 2 <= m with m*m <= {MAX_SIM_QUBITS}")
    LatticeParams(args.L)


def cmd_verify(args) -> int:
    _check_verify_sizes(args)
    verifier = Verifier(inject_fault=args.inject_fault)
    report = verifier.run(args.scope, L=args.L, m=args.m, samples=args.samples, seed=args.seed)
    write_json(report.to_dict(), os.path.join(args.out, f"verify_{args.scope}.json"))
    for check in report.checks:
        print(f"{check.status.upper():4} {check.check}")
    print(f"{args.scope}: {report.status}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_scaling(args) -> int:
    metrics = DepthMetrics()
    df = metrics.scaling_table(args.sizes)
    records = metrics.to_records(df)
    write_json({'rows': records, 'analysis': metrics.analyze_scaling(df)}, os.path.join(args.out, 'depth_scaling.json'))
    if args.plot:
        visualizer = DepthVisualizer()
        for name, fig in (
            ('depth_scaling.html', visualizer.create_depth_scaling_plot(records)),
            ('naive_comparison.html', visualizer.create_naive_comparison_plot(records)),
        ):
            visualizer.save_plot(fig, os.path.join(args.out, name))
    print(df[['L', 'n_qubits', 'star_depth', 'half_depth', 'toric_depth', 'toric_bound']].to_string(index=False))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='toric-graph', description='Toric code graph states and their circuits')
    parser.add_argument('--out', default=OUTPUT_DIR, help='output directory (default: $TORIC_OUTPUT_DIR)')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='warnings only')
    sub = parser.add_subparsers(dest='command', required=True)

    graph = sub.add_parser('graph', help='toric graph adjacency and decomposition')
    graph.add_argument('--L', type=int, required=True)
    graph.add_argument('--format', choices=('json', 'dot', 'edges', 'all'), default='all')
    graph.add_argument('--trace', action='store_true', help='include the reduction trace in the JSON')
    graph.set_defaults(func=cmd_graph)

    circuit = sub.add_parser('circuit', help='synthesize a preparation circuit')
    circuit.add_argument('kind', choices=('star', 'half', 'toric', 'encoder'))
    circuit.add_argument('--m', type=int, help='star size')
    circuit.add_argument('--n', type=int, help='half-graph side size')
    circuit.add_argument('--L', type=int, help='lattice size for toric and encoder')
    circuit.add_argument('--schedule', choices=SCHEDULES, default='deferred')
    circuit.set_defaults(func=cmd_circuit)

    verify = sub.add_parser('verify', help='run verification suites')
    verify.add_argument('--scope', choices=SUITES, default='all')
    verify.add_argument('--L', type=int, default=2)
    verify.add_argument('--m', type=int, default=3)
    verify.add_argument('--samples', type=int, default=ENCODER_SAMPLES)
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify.add_argument('--inject-fault', choices=FAULTS, default=None, help=argparse.SUPPRESS)
    verify.set_defaults(func=cmd_verify)

    scaling = sub.add_parser('scaling', help='depth-scaling table over lattice sizes')
    scaling.add_argument('--sizes', type=int, nargs='+', default=SCALING_SIZES)
    scaling.add_argument('--plot', action='store_true', help='also write plotly HTML plots')
    scaling.set_defaults(func=cmd_scaling)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution function."""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = 'DEBUG' if args.verbose else 'WARNING' if args.quiet else LOG_LEVEL
    setup_logging(level, args.out)
    logger.info(f"Running {args.command}")

    try:
        return args.func(args)
    except ToricGraphError as e:
        logger.error(f"Invalid input for {args.command}: {str(e)}")
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Error in main execution: {str(e)}")
        raise


if __name__ == '__main__':
    sys.exit(main())
