"""Mirror generator (Indoors)."""

PARAMS = {
    "size": 3.831,
    "detail": 3,
    "roughness": 0.436,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mirror"
    for key, value in params.items():
        node[key] = value
    return node
