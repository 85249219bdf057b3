"""Sea Foam 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.369,
    "detail": 1,
    "roughness": 0.085,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
