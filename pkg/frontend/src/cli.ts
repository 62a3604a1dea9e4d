#!/usr/bin/env node
/**
 * Run a job-list file: `gasdyn-figures jobs.json`.
 *
 * The file holds {"jobs": [...]} where each entry is one of the three
 * plot kinds (line1d / field2d / rates); see plots.ts for the fields.
 */

import * as fs from "node:fs";

import { PlotJob, runJob } from "./plots.js";

export function main(argv: string[]): number {
  if (argv.length !== 1) {
    console.error("usage: gasdyn-figures <jobs.json>");
    return 2;
  }
  let spec: { jobs: PlotJob[] };
  try {
    spec = JSON.parse(fs.readFileSync(argv[0], "utf8"));
  } catch (err) {
    console.error(`cannot read job list ${argv[0]}: ${err}`);
    return 2;
  }
  if (!Array.isArray(spec.jobs)) {
    console.error("job list must contain a 'jobs' array");
    return 2;
  }
  let failures = 0;
  for (const job of spec.jobs) {
    try {
      const out = runJob(job);
      console.log(`wrote ${out}`);
    } catch (err) {
      failures += 1;
      console.error(`job ${JSON.stringify(job.out ?? job.kind)} failed: ${err}`);
    }
  }
  return failures ? 1 : 0;
}

process.exit(main(process.argv.slice(2)));
