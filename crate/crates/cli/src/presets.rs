//! Built-in scenarios reproducing the standard figure set.

use crate::scenario::*;

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> Vec<Scenario>,
}

impl Preset {
    pub fn scenarios(&self) -> Vec<Scenario> {
        (self.build)()
    }
}

fn table(pairs: &[(&str, f64)]) -> ParamTable {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn sweep(axis: &str, start: f64, stop: f64, step: f64) -> SweepSpec {
    SweepSpec {
        axis: axis.into(),
        start,
        stop,
        steps: ((stop - start) / step).round() as usize,
    }
}

fn drive() -> DriveSettings {
    DriveSettings {
        delta: 0.1,
        period: 1000.0,
        steps_per_period: spread_core::floquet::DEFAULT_STEPS_PER_PERIOD,
    }
}

fn ground(name: &str, model: ModelName, params: ParamTable, sweep: SweepSpec) -> Scenario {
    Scenario::GroundSweep(GroundSweep {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        params,
        sweep,
    })
}

fn quench(name: &str, model: ModelName, cases: Vec<QuenchCase>) -> Scenario {
    Scenario::Quench(QuenchCurves {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        time: TimeSpec {
            end: 50.0,
            samples: 500,
        },
        cases,
    })
}

fn quench_case(label: &str, initial: ParamTable, final_params: ParamTable) -> QuenchCase {
    QuenchCase {
        label: label.into(),
        initial,
        final_params,
    }
}

/// H_f for 10, back to H_i for 10, then H_f for 30.
fn multi_case(label: &str, initial: ParamTable, final_params: ParamTable) -> MultiQuenchCase {
    let seg = |params: &ParamTable, duration| SegmentSpec {
        params: params.clone(),
        duration,
    };
    MultiQuenchCase {
        label: label.into(),
        segments: vec![
            seg(&final_params, 10.0),
            seg(&initial, 10.0),
            seg(&final_params, 30.0),
        ],
        initial,
    }
}

fn multiquench(name: &str, model: ModelName, cases: Vec<MultiQuenchCase>) -> Scenario {
    Scenario::Multiquench(MultiQuench {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        samples: 500,
        cases,
    })
}

fn floquet_n(name: &str, model: ModelName, cases: Vec<(&str, ParamTable)>) -> Scenario {
    Scenario::FloquetVsN(FloquetVsN {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        drive: drive(),
        cycles: CycleRange {
            start: 0,
            stop: 100,
        },
        cases: cases
            .into_iter()
            .map(|(label, base)| FloquetCase {
                label: label.into(),
                base,
            })
            .collect(),
    })
}

fn floquet_sweep(name: &str, model: ModelName, base: ParamTable, sweep: SweepSpec) -> Scenario {
    Scenario::FloquetSweep(FloquetSweep {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        drive: drive(),
        n_cycles: 40,
        base,
        sweep,
    })
}

fn work(
    name: &str,
    model: ModelName,
    initial: ParamTable,
    final_params: ParamTable,
    sweep: SweepSpec,
) -> Scenario {
    Scenario::WorkSweep(WorkSweep {
        name: name.into(),
        model,
        grid: GridSettings::default(),
        initial,
        final_params,
        sweep,
    })
}

use ModelName::{Ssh, ThreeSpin, Xy};

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig-derivative-3spin",
        description: "three-spin ground-state complexity and dC/dh, J3 = 1",
        build: || {
            vec![ground(
                "fig-derivative-3spin",
                ThreeSpin,
                table(&[("h", 0.0), ("j3", 1.0)]),
                sweep("h", -2.0, 2.5, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-derivative-3spin-weak",
        description: "three-spin ground-state complexity and dC/dh, J3 = 0.4",
        build: || {
            vec![ground(
                "fig-derivative-3spin-weak",
                ThreeSpin,
                table(&[("h", 0.0), ("j3", 0.4)]),
                sweep("h", -2.0, 2.0, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-quench-3spin",
        description: "three-spin single quench complexity, paramagnetic and topological directions",
        build: || {
            let a = table(&[("h", 1.4), ("j3", 0.4)]);
            let b = table(&[("h", 1.5), ("j3", 1.0)]);
            vec![quench(
                "fig-quench-3spin",
                ThreeSpin,
                vec![
                    quench_case("red", a.clone(), b.clone()),
                    quench_case("blue", b, a),
                ],
            )]
        },
    },
    Preset {
        name: "fig-multiquench-3spin",
        description: "three-spin quench, reverse quench, quench again",
        build: || {
            let a = table(&[("h", 1.0), ("j3", 1.2)]);
            let b = table(&[("h", 0.6), ("j3", 1.6)]);
            vec![multiquench(
                "fig-multiquench-3spin",
                ThreeSpin,
                vec![
                    multi_case("red", a.clone(), b.clone()),
                    multi_case("blue", b, a),
                ],
            )]
        },
    },
    Preset {
        name: "fig-derivative-xy",
        description: "XY ground-state complexity and dC/dh, gamma = 0.5",
        build: || {
            vec![ground(
                "fig-derivative-xy",
                Xy,
                table(&[("h", 0.0), ("gamma", 0.5)]),
                sweep("h", -2.0, 2.0, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-quench-xy",
        description: "XY single quench complexity in both directions",
        build: || {
            let a = table(&[("h", 1.2), ("gamma", 0.4)]);
            let b = table(&[("h", -1.0), ("gamma", 0.2)]);
            vec![quench(
                "fig-quench-xy",
                Xy,
                vec![
                    quench_case("red", a.clone(), b.clone()),
                    quench_case("blue", b, a),
                ],
            )]
        },
    },
    Preset {
        name: "fig-multiquench-xy",
        description: "XY quench, reverse quench, quench again",
        build: || {
            let a = table(&[("h", -1.0), ("gamma", 0.05)]);
            let b = table(&[("h", 1.2), ("gamma", 0.4)]);
            vec![multiquench(
                "fig-multiquench-xy",
                Xy,
                vec![
                    multi_case("blue", a.clone(), b.clone()),
                    multi_case("red", b, a),
                ],
            )]
        },
    },
    Preset {
        name: "fig-derivative-ssh",
        description: "SSH ground-state complexity and dC/dt1, t2 = 1",
        build: || {
            vec![ground(
                "fig-derivative-ssh",
                Ssh,
                table(&[("t1", 0.0), ("t2", 1.0)]),
                sweep("t1", 0.0, 2.0, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-multiquench-ssh",
        description: "SSH quench, reverse quench, quench again",
        build: || {
            vec![multiquench(
                "fig-multiquench-ssh",
                Ssh,
                vec![
                    multi_case(
                        "red",
                        table(&[("t1", 1.0), ("t2", 1.0)]),
                        table(&[("t1", 0.7), ("t2", 1.5)]),
                    ),
                    multi_case(
                        "blue",
                        table(&[("t1", 1.5), ("t2", 0.7)]),
                        table(&[("t1", 1.0), ("t2", 1.0)]),
                    ),
                ],
            )]
        },
    },
    Preset {
        name: "fig-floquet-3spin-n",
        description:
            "three-spin stroboscopic complexity against cycle count, T = 1000, delta = 0.1",
        build: || {
            vec![floquet_n(
                "fig-floquet-3spin-n",
                ThreeSpin,
                vec![
                    ("red", table(&[("h", 0.0), ("j3", 0.2)])),
                    ("blue", table(&[("h", 1.1), ("j3", 0.2)])),
                    ("green", table(&[("h", -1.1), ("j3", 1.0)])),
                ],
            )]
        },
    },
    Preset {
        name: "fig-floquet-3spin-sweep",
        description: "three-spin stroboscopic complexity against h after 40 cycles, J3 = 0.2",
        build: || {
            vec![floquet_sweep(
                "fig-floquet-3spin-sweep",
                ThreeSpin,
                table(&[("h", 0.0), ("j3", 0.2)]),
                sweep("h", -2.0, 2.0, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-floquet-3spin-sweep-strong",
        description: "three-spin stroboscopic complexity against h after 40 cycles, J3 = 1",
        build: || {
            vec![floquet_sweep(
                "fig-floquet-3spin-sweep-strong",
                ThreeSpin,
                table(&[("h", 0.0), ("j3", 1.0)]),
                sweep("h", -2.0, 2.5, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-floquet-xy-n",
        description: "XY stroboscopic complexity against cycle count, T = 1000, delta = 0.1",
        build: || {
            vec![floquet_n(
                "fig-floquet-xy-n",
                Xy,
                vec![
                    ("red", table(&[("h", 1.0), ("gamma", 0.2)])),
                    ("blue", table(&[("h", -1.0), ("gamma", 0.4)])),
                    ("green", table(&[("h", 1.5), ("gamma", 0.2)])),
                ],
            )]
        },
    },
    Preset {
        name: "fig-floquet-xy-sweep",
        description: "XY stroboscopic complexity against h after 40 cycles, gamma = 0.2",
        build: || {
            vec![floquet_sweep(
                "fig-floquet-xy-sweep",
                Xy,
                table(&[("h", 0.0), ("gamma", 0.2)]),
                sweep("h", -2.0, 2.0, 0.01),
            )]
        },
    },
    Preset {
        name: "fig-floquet-ssh-n",
        description: "SSH stroboscopic complexity against cycle count, T = 1000, delta = 0.1",
        build: || {
            vec![floquet_n(
                "fig-floquet-ssh-n",
                Ssh,
                vec![
                    ("blue", table(&[("t1", 0.5), ("t2", 0.5)])),
                    ("green", table(&[("t1", 1.0), ("t2", 0.2)])),
                    ("red", table(&[("t1", 0.2), ("t2", 1.0)])),
                ],
            )]
        },
    },
    Preset {
        name: "fig-floquet-ssh-sweep",
        description: "SSH stroboscopic complexity after 40 cycles, against t1 and against t2",
        build: || {
            vec![
                floquet_sweep(
                    "fig-floquet-ssh-sweep-t1",
                    Ssh,
                    table(&[("t1", 0.2), ("t2", 0.5)]),
                    sweep("t1", 0.2, 1.5, 0.01),
                ),
                floquet_sweep(
                    "fig-floquet-ssh-sweep-t2",
                    Ssh,
                    table(&[("t1", 0.5), ("t2", 0.2)]),
                    sweep("t2", 0.2, 1.5, 0.01),
                ),
            ]
        },
    },
    Preset {
        name: "fig-work-sweeps",
        description:
            "work mean and variance with derivatives against the initial parameter, all models",
        build: || {
            vec![
                work(
                    "fig-work-sweeps-3spin",
                    ThreeSpin,
                    table(&[("h", 0.0), ("j3", 1.0)]),
                    table(&[("h", 1.0), ("j3", 0.5)]),
                    sweep("h", -2.005, 2.505, 0.01),
                ),
                work(
                    "fig-work-sweeps-xy",
                    Xy,
                    table(&[("h", 0.0), ("gamma", 0.1)]),
                    table(&[("h", 0.6), ("gamma", 0.5)]),
                    sweep("h", -2.005, 2.005, 0.01),
                ),
                work(
                    "fig-work-sweeps-ssh",
                    Ssh,
                    table(&[("t1", 0.005), ("t2", 0.5)]),
                    table(&[("t1", 0.6), ("t2", 0.8)]),
                    sweep("t1", 0.005, 1.505, 0.01),
                ),
            ]
        },
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}
