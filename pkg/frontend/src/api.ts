// Thin client for the session service. All quiver logic lives on the
// server; the client only ships vertices back and forth.

export interface VertexState {
  id: string;
  status: "green" | "red" | "mixed" | "isolated" | null;
  frozen: boolean;
}

export interface ArrowState {
  from: string;
  to: string;
  weight: number;
}

export interface SessionState {
  id: string;
  vertices: VertexState[];
  arrows: ArrowState[];
  history: string[];
  all_red: boolean;
}

export interface FamilyInfo {
  name: string;
  params: string[];
}

export class ApiError extends Error {
  readonly status: number;
  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function parseOrThrow(res: Response): Promise<any> {
  if (res.status === 204) return null;
  let body: any = null;
  try {
    body = await res.json();
  } catch {
    // non-JSON error bodies fall through to the status text
  }
  if (!res.ok) {
    throw new ApiError(res.status, body?.error ?? res.statusText);
  }
  return body;
}

export class ExplorerApi {
  constructor(private readonly base: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<any> {
    const res = await fetch(this.base + path, init);
    return parseOrThrow(res);
  }

  private post(path: string, body?: unknown): Promise<any> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
  }

  async families(): Promise<FamilyInfo[]> {
    const doc = await this.request("/families");
    return doc.families;
  }

  async createSession(quiverDoc: unknown): Promise<SessionState> {
    const doc = await this.post("/sessions", quiverDoc);
    return doc.state;
  }

  async createFromFamily(
    name: string,
    level: number,
    params?: Record<string, number>,
  ): Promise<SessionState> {
    const doc = await this.post("/sessions/from-family", { name, level, params });
    return doc.state;
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  mutate(id: string, vertex: string): Promise<SessionState> {
    return this.post(`/sessions/${id}/mutate`, { vertex });
  }

  undo(id: string): Promise<SessionState> {
    return this.post(`/sessions/${id}/undo`);
  }

  async remove(id: string): Promise<void> {
    await this.request(`/sessions/${id}`, { method: "DELETE" });
  }
}
